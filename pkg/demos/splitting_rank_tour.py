"""
Splitting ranks, one space at a time
====================================

Remove a node from the restricted Dynkin diagram, read off what is left,
and keep the biggest piece.
"""

from splitrank import lookup, dimension, splitting_rank, gap_table, profile
from splitrank.srk import truncations

# a space with a double bond: two different removals tie for the maximum
X = lookup("F4^4/Sp(3)xSp(1)")
print(X.name, "n =", dimension(X), "r =", X.rank)

for t in truncations(X):
    print("  remove", t.removed, "->", t.y_name, "dim", t.dim_total)

srk, best = splitting_rank(X)
print("srk =", srk, "reached by", sorted(t.y_name for t in best))

# the runner-up can be reducible; here two pieces share the second place
g = gap_table(lookup("Sp(5,R)/U(5)"))
print("\nSp(5,R)/U(5): srk", g.srk, "gap", g.gap, [t.y_name for t in g.second_maximizers])

# all k at once: srk^k drops strictly from n down to r
p = profile(lookup("E8(C)/E8"))
print("\nE8(C)/E8 srk^k:", p.values)
print("E8(C)/E8  si^k:", p.si)
