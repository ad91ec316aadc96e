"""
Matching root spaces to a frame
===============================

Each covector of a frame claims root spaces on which it is nonzero.
Either every covector gets its share, or some group of covectors is short
and the matcher says which one.
"""

from fractions import Fraction

from splitrank import lookup, Covector, build_instance, find_matching, verify_cardinality, random_frames

X = lookup("SU(2,4)")
frame = [Covector([Fraction(1, 2), 0]), Covector([0, 1])]

inst = build_instance(X, frame)
res = find_matching(inst)
print(X.name, "demands", inst.demands, "slots", len(inst.slots))
for u, slots in enumerate(res.assignment):
    print(f"  v{u + 1}:", len(slots), "slots")

# Sp(2,R)/U(2) is one of the excluded spaces: the two covectors together fall short
bad = lookup("Sp(2,R)/U(2)")
fr = random_frames(2, 1, seed=0)[0]
print("\n", bad.name, verify_cardinality(bad, fr).violations)
print("deficient covectors:", [u + 1 for u in find_matching(build_instance(bad, fr)).deficient])
