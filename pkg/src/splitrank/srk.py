"""Splitting ranks from Dynkin diagram truncations.

A truncation removes a set of simple nodes; the kept nodes generate a parabolic
subsystem whose roots are exactly those supported on the kept nodes. The
splitting rank is the largest ``dim(Y) + 1`` over single-node removals, and the
k-th splitting rank uses removals of k nodes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .catalog import (
    MultiplicityMap,
    SymmetricSpaceEntry,
    dimension,
    identify,
    normalize,
)
from .linalg import EchelonBasis
from .roots import DOUBLE, LONG, MIDDLE, SHORT, DynkinFamily, RestrictedRootSystem, build_root_system
from .roots import connected_components, support_closure


@dataclass(frozen=True)
class Component:
    nodes: tuple[int, ...]
    family: DynkinFamily
    multiplicities: MultiplicityMap
    name: str
    entry: SymmetricSpaceEntry | None

    @property
    def dim(self) -> int:
        if self.entry is not None:
            return dimension(self.entry)
        return dimension(SymmetricSpaceEntry(self.name, self.family, self.multiplicities))


@dataclass(frozen=True)
class TruncationResult:
    removed_nodes: frozenset[int]
    components: tuple[Component, ...]
    dim_Y: int
    dim_total: int

    @property
    def removed(self) -> list[int]:
        """1-based node labels."""
        return sorted(i + 1 for i in self.removed_nodes)

    @property
    def names(self) -> list[str]:
        return sorted(c.name for c in self.components)

    @property
    def y_name(self) -> str:
        return product_name(self.names)

    def to_json(self) -> dict:
        removed = self.removed
        return {
            "removed": removed[0] if len(removed) == 1 else removed,
            "components": self.names,
            "dim": self.dim_total,
        }


def product_name(names: list[str]) -> str:
    return " x ".join(sorted(names)) if names else "point"


# ---------------------------------------------------------------------------
# sub-diagram classification

def _node_classes(system: RestrictedRootSystem) -> list[str]:
    return [a.orbit_class for a in system.simple_roots]


def _path_order(nodes: tuple[int, ...], adj) -> list[int]:
    ends = [i for i in nodes if sum(adj[i][j] for j in nodes) <= 1]
    order = [ends[0]]
    while len(order) < len(nodes):
        nxt = next(j for j in nodes if adj[order[-1]][j] and j not in order)
        order.append(nxt)
    return order


def classify(system: RestrictedRootSystem, nodes: tuple[int, ...],
             mults: MultiplicityMap) -> tuple[str, int, dict[str, int]]:
    """Family, rank and per-class multiplicities of a connected sub-diagram."""
    a = system.cartan_matrix
    adj = system.adjacency
    cls = _node_classes(system)
    n = len(nodes)
    amb = system.family.family
    m_of = {c: mults[c] for c, _ in mults.items}

    if amb == "BC" and system.rank - 1 in nodes:
        out = {SHORT: m_of[SHORT], DOUBLE: m_of[DOUBLE]}
        if n >= 2:
            out[MIDDLE] = m_of[MIDDLE]
        return "BC", n, out
    if n == 1:
        return "A", 1, {MIDDLE: m_of[cls[nodes[0]]]}

    bonds = {abs(a[i][j] * a[j][i]) for i in nodes for j in nodes if i != j}
    if 3 in bonds:
        return "G2", 2, {LONG: m_of[LONG], SHORT: m_of[SHORT]}
    if 2 in bonds:
        out = {LONG: m_of[LONG], SHORT: m_of[SHORT]}
        order = _path_order(nodes, adj)
        pos = next(p for p in range(n - 1) if a[order[p]][order[p + 1]] * a[order[p + 1]][order[p]] == 2)
        if n == 2:
            return "B", 2, out
        if n == 4 and pos == 1:
            return "F4", 4, out
        # the double bond sits at one end of the path
        end = order[0] if pos == 0 else order[-1]
        return ("B" if cls[end] == SHORT else "C"), n, out

    m = m_of[cls[nodes[0]]]
    degree = {i: sum(adj[i][j] for j in nodes) for i in nodes}
    branch = [i for i in nodes if degree[i] == 3]
    if not branch:
        return "A", n, {MIDDLE: m}
    hub = branch[0]
    arms = []
    for start in (j for j in nodes if adj[hub][j]):
        length, prev, cur = 1, hub, start
        while True:
            nxt = [j for j in nodes if adj[cur][j] and j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return "D", n, {MIDDLE: m}
    return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}[tuple(arms)], n, {MIDDLE: m}


def _component(system, nodes, mults) -> Component:
    fam, rank, raw = classify(system, nodes, mults)
    family, m = normalize(fam, rank, raw)
    entry = identify(family, m)
    name = entry.name if entry is not None else "unnamed"
    return Component(nodes, family, m, name, entry)


def truncate(entry: SymmetricSpaceEntry, removed: frozenset[int] | set[int]) -> TruncationResult:
    return _truncate(entry, frozenset(removed))


@lru_cache(maxsize=None)
def _truncate(entry: SymmetricSpaceEntry, removed: frozenset[int]) -> TruncationResult:
    system = build_root_system(entry.family)
    r = system.rank
    if not removed <= frozenset(range(r)):
        raise ValueError(f"node out of range for rank {r}")
    kept = [i for i in range(r) if i not in removed]
    comps = tuple(_component(system, c, entry.multiplicities) for c in connected_components(system, kept))
    dim_y = sum(c.dim for c in comps)
    # independent count straight off the ambient root list
    direct = len(kept) + sum(entry.multiplicities[a.orbit_class] for a in support_closure(system, kept))
    if direct != dim_y:
        raise AssertionError(f"{entry.name} minus {sorted(removed)}: components give {dim_y}, roots give {direct}")
    return TruncationResult(removed, comps, dim_y, dim_y + len(removed))


def truncations(entry: SymmetricSpaceEntry) -> list[TruncationResult]:
    return [truncate(entry, {i}) for i in range(entry.rank)]


def _best(results: list[TruncationResult]) -> tuple[int, list[TruncationResult]]:
    top = max(t.dim_total for t in results)
    return top, [t for t in results if t.dim_total == top]


def splitting_rank(entry: SymmetricSpaceEntry) -> tuple[int, list[TruncationResult]]:
    if entry.rank < 1:
        raise ValueError("splitting rank needs rank >= 1")
    return _best(truncations(entry))


def splitting_rank_k(entry: SymmetricSpaceEntry, k: int) -> tuple[int, list[TruncationResult]]:
    r = entry.rank
    if not 0 <= k <= r:
        raise ValueError(f"k={k} outside 0..{r}")
    if k == 0:
        return dimension(entry), []
    return _best([truncate(entry, set(s)) for s in combinations(range(r), k)])


class OracleBoundError(ValueError):
    pass


def oracle_splitting_rank_k(entry: SymmetricSpaceEntry, k: int, rank_bound: int = 5) -> int:
    """max of r + sum of multiplicities over every span-closed root subsystem of rank <= r-k.

    Works on all positive roots, not only simple ones: the closed subsystems
    (flats) are grown one root at a time and deduplicated, so this does not rely
    on any Weyl-conjugacy argument.
    """
    r = entry.rank
    if r > rank_bound:
        raise OracleBoundError(f"oracle refuses rank {r} > bound {rank_bound}")
    if not 1 <= k <= r:
        raise ValueError(f"k={k} outside 1..{r}")
    system = build_root_system(entry.family)
    weight = [entry.multiplicities[a.orbit_class] for a in system.positive_roots]
    best = 0
    for level in flats(entry.family)[: r - k + 1]:
        for flat in level:
            best = max(best, sum(w for j, w in enumerate(weight) if flat >> j & 1))
    return r + best


@lru_cache(maxsize=None)
def flats(family: DynkinFamily) -> tuple[tuple[int, ...], ...]:
    """Span-closed subsets of positive roots as bitmasks, grouped by span rank 0..r-1."""
    system = build_root_system(family)
    roots = [a.coefficients for a in system.positive_roots]
    r = system.rank
    levels: list[tuple[int, ...]] = [(0,)]
    bases = {0: EchelonBasis(r)}
    for _ in range(r - 1):
        nxt: dict[int, EchelonBasis] = {}
        for flat in levels[-1]:
            basis = bases[flat]
            covered = flat
            for i, a in enumerate(roots):
                if covered >> i & 1:
                    continue
                grown = basis.copy()
                grown.add(a)
                normals = grown.normals()
                closed = flat
                for j, b in enumerate(roots):
                    if not closed >> j & 1 and all(sum(x * y for x, y in zip(b, nv)) == 0 for nv in normals):
                        closed |= 1 << j
                # every root in the new flat leads to the same flat from here
                covered |= closed
                if closed not in nxt:
                    nxt[closed] = grown
        levels.append(tuple(sorted(nxt)))
        bases = nxt
    return tuple(levels)


# ---------------------------------------------------------------------------
# profiles, gaps, inequality

@dataclass(frozen=True)
class SplitRankProfile:
    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.values[0]

    @property
    def rank(self) -> int:
        return len(self.values) - 1

    @property
    def si(self) -> tuple[int, ...]:
        return tuple(self.n - v for v in self.values)

    def to_json(self) -> dict:
        return {"values": list(self.values), "si": list(self.si)}


@lru_cache(maxsize=None)
def profile(entry: SymmetricSpaceEntry) -> SplitRankProfile:
    return SplitRankProfile(tuple(splitting_rank_k(entry, k)[0] for k in range(entry.rank + 1)))


@dataclass(frozen=True)
class GapResult:
    srk: int
    gap: int | None
    second: int | None
    second_maximizers: tuple[TruncationResult, ...]

    @property
    def has_gap(self) -> bool:
        return self.gap is not None


def gap_table(entry: SymmetricSpaceEntry) -> GapResult:
    """srk minus the second largest distinct dim over single-node truncations."""
    if entry.rank < 2:
        raise ValueError("gap needs rank >= 2")
    ts = truncations(entry)
    srk = max(t.dim_total for t in ts)
    lower = [t.dim_total for t in ts if t.dim_total < srk]
    if not lower:
        return GapResult(srk, None, None, ())
    second = max(lower)
    return GapResult(srk, srk - second, second, tuple(t for t in ts if t.dim_total == second))


# spaces with srk < 3r - 2, where the top-k inequality genuinely fails
KNOWN_EXCEPTIONS = {
    (DynkinFamily("A", 2), MultiplicityMap.of({MIDDLE: 1})): 2,
    (DynkinFamily("B", 2), MultiplicityMap.of({LONG: 1, SHORT: 1})): 2,
    (DynkinFamily("G2", 2), MultiplicityMap.of({LONG: 1, SHORT: 1})): 2,
    (DynkinFamily("A", 3), MultiplicityMap.of({MIDDLE: 1})): 3,
}


@dataclass(frozen=True)
class KCheck:
    k: int
    srk_k: int
    bound: int
    ok: bool
    known_exception: bool
    witness: tuple[int, ...]


@dataclass(frozen=True)
class KSrkReport:
    entry: SymmetricSpaceEntry
    srk: int
    checks: tuple[KCheck, ...]

    @property
    def failures(self) -> list[KCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def passed(self) -> bool:
        """True when every failure is one of the documented exceptions."""
        return all(c.ok or c.known_exception for c in self.checks)


def verify_k_srk_inequality(entry: SymmetricSpaceEntry) -> KSrkReport:
    srk = splitting_rank(entry)[0]
    exc_k = KNOWN_EXCEPTIONS.get(entry.key)
    checks = []
    for k in range(1, entry.rank + 1):
        value, best = splitting_rank_k(entry, k)
        bound = srk - 2 * (k - 1)
        ok = value <= bound
        checks.append(KCheck(k, value, bound, ok, (not ok) and exc_k == k, tuple(best[0].removed)))
    return KSrkReport(entry, srk, tuple(checks))
