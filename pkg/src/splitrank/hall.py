"""Cardinality bounds on sums of root-space blocks and the demand matching behind them.

For covectors v_1..v_k on the flat, Q(v_i) is the sum of root spaces whose roots
do not vanish on v_i. The bound checked here is

    dim(Q(v_i1) + ... + Q(v_ik)) >= 2k + n - srk - 2

and the matching hands each covector its demanded number of distinct basis
vectors of those root spaces (first covector n - srk, the rest 2).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .catalog import SymmetricSpaceEntry, dimension
from .linalg import rank
from .roots import Covector, DynkinFamily, build_root_system, evaluate
from .srk import splitting_rank


def _nonvanishing(entry: SymmetricSpaceEntry, covectors: Sequence[Covector]) -> list[list[bool]]:
    """table[i][a]: root a is non-zero on covector i."""
    for v in covectors:
        if len(v) != entry.rank:
            raise ValueError(f"covector of length {len(v)} for a rank {entry.rank} space")
    return [list(_row(entry.family, v.values)) for v in covectors]


@lru_cache(maxsize=4096)
def _row(family: DynkinFamily, values: tuple[Fraction, ...]) -> tuple[bool, ...]:
    roots = build_root_system(family).positive_roots
    if all(x.denominator == 1 for x in values):
        ints = [int(x) for x in values]
        return tuple(sum(c * x for c, x in zip(a.coefficients, ints)) != 0 for a in roots)
    v = Covector(values)
    return tuple(evaluate(a, v) != 0 for a in roots)


def q_sum_dim(entry: SymmetricSpaceEntry, covectors: Sequence[Covector], subset: Sequence[int]) -> int:
    """Sum of multiplicities of roots that are non-zero on some selected covector (0-based indices)."""
    if not subset:
        raise ValueError("subset must be non-empty")
    system = build_root_system(entry.family)
    picked = [covectors[i] for i in subset]
    table = _nonvanishing(entry, picked)
    return sum(
        entry.multiplicities[a.orbit_class]
        for j, a in enumerate(system.positive_roots)
        if any(row[j] for row in table)
    )


def vanishing_weight(entry: SymmetricSpaceEntry, covectors: Sequence[Covector], subset: Sequence[int]) -> int:
    system = build_root_system(entry.family)
    picked = [covectors[i] for i in subset]
    return sum(
        entry.multiplicities[a.orbit_class]
        for a in system.positive_roots
        if all(evaluate(a, v) == 0 for v in picked)
    )


def is_spanning(covectors: Sequence[Covector], r: int) -> bool:
    return len(covectors) == r and rank([v.values for v in covectors]) == r


@dataclass(frozen=True)
class Violation:
    subset: tuple[int, ...]
    q_dim: int
    bound: int


@dataclass(frozen=True)
class CardinalityReport:
    entry: SymmetricSpaceEntry
    n: int
    srk: int
    subsets_checked: int
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_cardinality(entry: SymmetricSpaceEntry, covectors: Sequence[Covector],
                       srk: int | None = None) -> CardinalityReport:
    r = entry.rank
    if not is_spanning(covectors, r):
        raise ValueError("covectors must form a spanning frame of the flat")
    n = dimension(entry)
    srk = splitting_rank(entry)[0] if srk is None else srk
    system = build_root_system(entry.family)
    masks = [sum(1 << j for j, hit in enumerate(row) if hit) for row in _nonvanishing(entry, covectors)]
    by_class: dict[str, int] = {}
    for j, a in enumerate(system.positive_roots):
        by_class[a.orbit_class] = by_class.get(a.orbit_class, 0) | 1 << j
    weighted = [(entry.multiplicities[c], m) for c, m in by_class.items()]
    # union[S] of non-vanishing roots for every subset S of the frame, built from S minus its low bit
    union = [0] * (1 << r)
    bad = []
    for s in range(1, 1 << r):
        low = s & -s
        union[s] = union[s ^ low] | masks[low.bit_length() - 1]
    for k in range(1, r + 1):
        bound = 2 * k + n - srk - 2
        for sub in combinations(range(r), k):
            u = union[sum(1 << i for i in sub)]
            q = sum(w * (u & m).bit_count() for w, m in weighted)
            if q < bound:
                bad.append(Violation(sub, q, bound))
    count = (1 << r) - 1
    return CardinalityReport(entry, n, srk, count, tuple(bad))


def random_frames(r: int, count: int, seed: int = 0, lo: int = -3, hi: int = 3) -> list[list[Covector]]:
    """Seeded spanning frames with small integer entries; non-spanning draws are rejected."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        rows = [[rng.randint(lo, hi) for _ in range(r)] for _ in range(r)]
        if rank(rows) == r:
            out.append([Covector(row) for row in rows])
    return out


# ---------------------------------------------------------------------------
# demand matching

@dataclass(frozen=True)
class MatchingInstance:
    demands: tuple[int, ...]
    slots: tuple[tuple[tuple[int, ...], int], ...]  # (root coefficients, copy index from 1)
    adjacency: tuple[frozenset[int], ...]  # slot indices reachable from each left node

    @property
    def total_demand(self) -> int:
        return sum(self.demands)


def build_instance(entry: SymmetricSpaceEntry, covectors: Sequence[Covector], srk: int | None = None,
                   first_demand: str = "srk") -> MatchingInstance:
    """first_demand="srk" asks n - srk of covector 1; "rank" asks r (the older frame shape)."""
    if not covectors:
        raise ValueError("need at least one covector")
    n = dimension(entry)
    srk = splitting_rank(entry)[0] if srk is None else srk
    if first_demand == "srk":
        first = n - srk
    elif first_demand == "rank":
        first = entry.rank
    else:
        raise ValueError(f"first_demand must be 'srk' or 'rank', not {first_demand!r}")
    system = build_root_system(entry.family)
    slots = []
    root_of_slot = []
    for j, a in enumerate(system.positive_roots):
        for c in range(1, entry.multiplicities[a.orbit_class] + 1):
            slots.append((a.coefficients, c))
            root_of_slot.append(j)
    table = _nonvanishing(entry, covectors)
    adjacency = tuple(frozenset(s for s, j in enumerate(root_of_slot) if row[j]) for row in table)
    demands = (first,) + (2,) * (len(covectors) - 1)
    return MatchingInstance(demands, tuple(slots), adjacency)


@dataclass(frozen=True)
class MatchingResult:
    assignment: tuple[tuple[int, ...], ...] | None  # slot indices per left node
    deficient: tuple[int, ...] | None  # left nodes violating Hall's condition

    @property
    def feasible(self) -> bool:
        return self.assignment is not None


def find_matching(inst: MatchingInstance) -> MatchingResult:
    """Demand matching as a max flow; on failure the min cut gives a Hall-deficient set.

    Slots with the same set of neighbors are interchangeable, so they are
    pooled into one capacitated node (usually the copies of one root space).
    """
    nleft = len(inst.demands)
    sig = [0] * len(inst.slots)
    for u, adj in enumerate(inst.adjacency):
        for s in adj:
            sig[s] |= 1 << u
    pools: dict[int, list[int]] = {}
    for s, bits in enumerate(sig):
        if bits:
            pools.setdefault(bits, []).append(s)
    groups = sorted(pools.items(), key=lambda kv: kv[1][0])
    cap = [len(slots) for _, slots in groups]
    edges = [[g for g, (bits, _) in enumerate(groups) if bits >> u & 1] for u in range(nleft)]
    flow = [[0] * len(groups) for _ in range(nleft)]
    sent = [0] * nleft
    used = [0] * len(groups)

    while True:
        # BFS from the source over the residual graph
        prev_left: dict[int, int | None] = {u: None for u in range(nleft) if sent[u] < inst.demands[u]}
        prev_group: dict[int, int] = {}
        queue = list(prev_left)
        end = None
        while queue and end is None:
            nxt = []
            for u in queue:
                for g in edges[u]:
                    if g in prev_group:
                        continue
                    prev_group[g] = u
                    if used[g] < cap[g]:
                        end = g
                        break
                    for w in range(nleft):
                        if flow[w][g] > 0 and w not in prev_left:
                            prev_left[w] = g
                            nxt.append(w)
                if end is not None:
                    break
            queue = nxt
        if end is None:
            break
        g = end
        used[g] += 1
        while True:
            u = prev_group[g]
            flow[u][g] += 1
            back = prev_left[u]
            if back is None:
                sent[u] += 1
                break
            flow[u][back] -= 1
            g = back

    if sent != list(inst.demands):
        # prev_left now holds every left node reachable from the source
        return MatchingResult(None, tuple(sorted(prev_left)))
    out: list[list[int]] = [[] for _ in range(nleft)]
    for g, (_, slots) in enumerate(groups):
        it = iter(slots)
        for u in range(nleft):
            out[u].extend(next(it) for _ in range(flow[u][g]))
    result = MatchingResult(tuple(tuple(sorted(x)) for x in out), None)
    check_result(inst, result)
    return result


def neighborhood(inst: MatchingInstance, nodes: Sequence[int]) -> frozenset[int]:
    return frozenset().union(*(inst.adjacency[u] for u in nodes)) if nodes else frozenset()


def check_result(inst: MatchingInstance, result: MatchingResult) -> None:
    """Raise AssertionError unless the result is a valid assignment or a genuine Hall violation."""
    if result.assignment is not None:
        used = [s for slots in result.assignment for s in slots]
        if len(used) != len(set(used)):
            raise AssertionError("slot used twice")
        for u, slots in enumerate(result.assignment):
            if len(slots) != inst.demands[u] or not set(slots) <= inst.adjacency[u]:
                raise AssertionError(f"left node {u} badly served")
    else:
        nodes = result.deficient or ()
        if len(neighborhood(inst, nodes)) >= sum(inst.demands[u] for u in nodes):
            raise AssertionError("certificate is not deficient")


def hall_violations(inst: MatchingInstance) -> list[tuple[int, ...]]:
    """Every non-empty left subset whose neighborhood is smaller than its total demand."""
    bad = []
    left = range(len(inst.demands))
    for k in range(1, len(inst.demands) + 1):
        for sub in combinations(left, k):
            if len(neighborhood(inst, sub)) < sum(inst.demands[u] for u in sub):
                bad.append(sub)
    return bad


def slot_label(inst: MatchingInstance, s: int) -> tuple[list[int], int]:
    coeffs, copy = inst.slots[s]
    return list(coeffs), copy

