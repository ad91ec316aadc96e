"""Restricted root systems in the simple-root basis.

Classical families (A, B, C, D, BC) come from their closed-form root lists in
the orthonormal e-basis, converted to simple-root coordinates. Exceptional
families are generated by reflection closure from the Cartan matrix.

Conventions:
  * ``cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j)``
  * nodes are numbered 0..r-1 internally; 1..r in anything user facing.
  * E-type numbering has a chain 1-2-3-5-6(-7-8) with node 4 attached to 3.
  * F4: 1 - 2 => 3 - 4 (nodes 1, 2 long). G2: node 1 short, node 2 long.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import EchelonBasis, solve

MIDDLE, SHORT, LONG, DOUBLE = "middle", "short", "long", "double"

FIXED_RANKS = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
MIN_RANKS = {"A": 1, "B": 2, "C": 2, "D": 3, "BC": 1}
FAMILIES = ("A", "B", "C", "D", "BC", "E6", "E7", "E8", "F4", "G2")

POSITIVE_ROOT_COUNTS = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "BC": lambda r: r * (r + 1),
    "E6": lambda r: 36,
    "E7": lambda r: 63,
    "E8": lambda r: 120,
    "F4": lambda r: 24,
    "G2": lambda r: 6,
}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DynkinFamily:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}")
        if self.family in FIXED_RANKS:
            if self.rank != FIXED_RANKS[self.family]:
                raise RootSystemError(
                    f"family {self.family} has fixed rank {FIXED_RANKS[self.family]}, got rank {self.rank}"
                )
        elif self.rank < MIN_RANKS[self.family]:
            raise RootSystemError(
                f"family {self.family} requires rank >= {MIN_RANKS[self.family]}, got rank {self.rank}"
            )

    def __str__(self) -> str:
        if self.family in FIXED_RANKS:
            return self.family
        return f"{self.family}{self.rank}"

    @property
    def orbit_classes(self) -> tuple[str, ...]:
        f, r = self.family, self.rank
        if f in ("A", "D", "E6", "E7", "E8"):
            return (MIDDLE,)
        if f == "BC":
            return (MIDDLE, SHORT, DOUBLE) if r >= 2 else (SHORT, DOUBLE)
        return (LONG, SHORT)


@dataclass(frozen=True, order=True)
class Root:
    coefficients: tuple[int, ...]
    orbit_class: str = field(compare=False)

    @property
    def height(self) -> int:
        return sum(self.coefficients)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coefficients) if c)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coefficients)) + ")"


@dataclass(frozen=True)
class Covector:
    """Values of the simple roots on a tangent vector of the flat."""

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable[int | Fraction | str]):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class RestrictedRootSystem:
    family: DynkinFamily
    positive_roots: tuple[Root, ...]
    cartan_matrix: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.family.rank

    @property
    def adjacency(self) -> tuple[tuple[bool, ...], ...]:
        r = self.rank
        return tuple(
            tuple(i != j and self.cartan_matrix[i][j] != 0 for j in range(r)) for i in range(r)
        )

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        by_coeffs = {a.coefficients: a for a in self.positive_roots}
        return tuple(by_coeffs[_unit(self.rank, i)] for i in range(self.rank))

    def index(self, root: Root) -> int:
        return self._index()[root.coefficients]

    def _index(self) -> dict[tuple[int, ...], int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {a.coefficients: i for i, a in enumerate(self.positive_roots)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def root(self, coefficients: Sequence[int]) -> Root:
        return self.positive_roots[self._index()[tuple(coefficients)]]

    def to_json(self) -> dict:
        return {
            "family": self.family.family,
            "rank": self.rank,
            "roots": [list(a.coefficients) for a in self.positive_roots],
            "classes": [a.orbit_class for a in self.positive_roots],
        }


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(n))


# ---------------------------------------------------------------------------
# closed forms for the classical families

def _e(n: int, i: int, s: int = 1) -> list[int]:
    v = [0] * n
    v[i] = s
    return v


def _add(u: list[int], v: list[int]) -> list[int]:
    return [a + b for a, b in zip(u, v)]


def _ambient(family: str, r: int) -> tuple[list[list[int]], list[tuple[list[int], str]], int]:
    """Simple roots and positive roots (with classes) in the e-basis."""
    if family == "A":
        n = r + 1
        simple = [_add(_e(n, i), _e(n, i + 1, -1)) for i in range(r)]
        pos = [(_add(_e(n, i), _e(n, j, -1)), MIDDLE) for i, j in combinations(range(n), 2)]
        return simple, pos, n
    n = r
    minus = [(_add(_e(n, i), _e(n, j, -1)), j) for i, j in combinations(range(n), 2)]
    plus = [(_add(_e(n, i), _e(n, j)), j) for i, j in combinations(range(n), 2)]
    simple = [_add(_e(n, i), _e(n, i + 1, -1)) for i in range(r - 1)]
    if family == "B":
        simple.append(_e(n, r - 1))
        pos = [(v, LONG) for v, _ in minus + plus] + [(_e(n, i), SHORT) for i in range(n)]
    elif family == "C":
        simple.append(_e(n, r - 1, 2))
        pos = [(v, SHORT) for v, _ in minus + plus] + [(_e(n, i, 2), LONG) for i in range(n)]
    elif family == "D":
        simple.append(_add(_e(n, r - 2), _e(n, r - 1)))
        pos = [(v, MIDDLE) for v, _ in minus + plus]
    elif family == "BC":
        simple.append(_e(n, r - 1))
        pos = (
            [(v, MIDDLE) for v, _ in minus + plus]
            + [(_e(n, i), SHORT) for i in range(n)]
            + [(_e(n, i, 2), DOUBLE) for i in range(n)]
        )
    else:
        raise RootSystemError(f"no closed form for {family}")
    return simple, pos, n


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _classical(fam: DynkinFamily) -> RestrictedRootSystem:
    f, r = fam.family, fam.rank
    simple, pos, n = _ambient(f, r)
    cartan = tuple(
        tuple(2 * _dot(simple[i], simple[j]) // _dot(simple[j], simple[j]) for j in range(r))
        for i in range(r)
    )
    # coordinates: solve sum_i c_i simple_i = v using the Gram system
    gram = [[_dot(simple[i], simple[j]) for j in range(r)] for i in range(r)]
    cols = [solve(gram, [int(i == j) for i in range(r)]) for j in range(r)]
    roots = []
    for v, cls in pos:
        b = [_dot(s, v) for s in simple]
        c = [sum(cols[j][i] * b[j] for j in range(r) if b[j]) for i in range(r)]
        if any(x.denominator != 1 for x in c):
            raise AssertionError(f"non-integral root {v} in {fam}")
        roots.append(Root(tuple(int(x) for x in c), cls))
    return RestrictedRootSystem(fam, tuple(sorted(roots)), cartan)


# ---------------------------------------------------------------------------
# exceptional Cartan matrices and reflection closure

def _chain(r: int) -> list[list[int]]:
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2
    return a


def _link(a: list[list[int]], i: int, j: int, aij: int = -1, aji: int = -1) -> None:
    a[i][j] = aij
    a[j][i] = aji


def exceptional_cartan(family: str) -> tuple[tuple[int, ...], ...]:
    if family in ("E6", "E7", "E8"):
        r = FIXED_RANKS[family]
        a = _chain(r)
        # chain 1-2-3-5-6-..., node 4 hangs off node 3 (1-based)
        order = [0, 1, 2] + list(range(4, r))
        for x, y in zip(order, order[1:]):
            _link(a, x, y)
        _link(a, 2, 3)
    elif family == "F4":
        a = _chain(4)
        _link(a, 0, 1)
        _link(a, 1, 2, -2, -1)
        _link(a, 2, 3)
    elif family == "G2":
        a = _chain(2)
        _link(a, 0, 1, -1, -3)
    else:
        raise RootSystemError(f"{family} is not exceptional")
    return tuple(tuple(row) for row in a)


def cartan_matrix(fam: DynkinFamily) -> tuple[tuple[int, ...], ...]:
    if fam.family in FIXED_RANKS:
        return exceptional_cartan(fam.family)
    return _classical(fam).cartan_matrix


def symmetrizer(cartan: Sequence[Sequence[int]]) -> list[Fraction]:
    """Half squared lengths d_j of the simple roots, so that a_ij d_j is symmetric."""
    r = len(cartan)
    d: list[Fraction | None] = [None] * r
    for start in range(r):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if i != j and cartan[i][j] and d[j] is None:
                    # a_ij d_j = a_ji d_i
                    d[j] = cartan[j][i] * d[i] / cartan[i][j]
                    stack.append(j)
    return d  # type: ignore[return-value]


def norm(coeffs: Sequence[int], cartan: Sequence[Sequence[int]], d: Sequence[Fraction]) -> Fraction:
    r = len(coeffs)
    return sum(
        (coeffs[i] * coeffs[j] * cartan[i][j] * d[j] for i in range(r) for j in range(r)),
        Fraction(0),
    )


def reflection_closure(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Positive roots of a reduced system, by closing the simple roots under simple reflections."""
    r = len(cartan)
    simple = [_unit(r, i) for i in range(r)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for j in range(r):
                pairing = sum(beta[i] * cartan[i][j] for i in range(r))
                if pairing == 0:
                    continue
                gamma = tuple(b - pairing * (1 if i == j else 0) for i, b in enumerate(beta))
                if all(c >= 0 for c in gamma) and any(gamma) and gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return sorted(seen)


def classify_by_length(roots: Iterable[tuple[int, ...]], cartan: Sequence[Sequence[int]]) -> list[Root]:
    d = symmetrizer(cartan)
    roots = list(roots)
    norms = [norm(c, cartan, d) for c in roots]
    lo, hi = min(norms), max(norms)
    out = []
    for c, nv in zip(roots, norms):
        if lo == hi:
            cls = MIDDLE
        else:
            cls = LONG if nv == hi else SHORT
        out.append(Root(c, cls))
    return out


def _generated(fam: DynkinFamily, cartan) -> RestrictedRootSystem:
    roots = classify_by_length(reflection_closure(cartan), cartan)
    return RestrictedRootSystem(fam, tuple(sorted(roots)), tuple(tuple(row) for row in cartan))


@lru_cache(maxsize=None)
def build_root_system(family: DynkinFamily | str, rank: int | None = None) -> RestrictedRootSystem:
    if not isinstance(family, DynkinFamily):
        family = DynkinFamily(family, FIXED_RANKS.get(family, rank) if rank is None else rank)
    if family.family in FIXED_RANKS:
        system = _generated(family, exceptional_cartan(family.family))
    else:
        system = _classical(family)
    expected = POSITIVE_ROOT_COUNTS[family.family](family.rank)
    if len(system.positive_roots) != expected:
        raise AssertionError(f"{family}: {len(system.positive_roots)} positive roots, expected {expected}")
    return system


def generated_by_reflection(family: DynkinFamily) -> RestrictedRootSystem:
    """Reflection-closure construction for any reduced family (used as a cross-check)."""
    if family.family == "BC":
        raise RootSystemError("BC is non-reduced; reflection closure of the simple roots misses 2e_i")
    return _generated(family, cartan_matrix(family))


# ---------------------------------------------------------------------------
# evaluation and span computations

def evaluate(root: Root, v: Covector) -> Fraction:
    if len(root.coefficients) != len(v.values):
        raise ValueError(f"root of rank {len(root.coefficients)} against covector of length {len(v.values)}")
    return sum((c * x for c, x in zip(root.coefficients, v.values)), Fraction(0))


def span_closure(system: RestrictedRootSystem, generators: Iterable[Root]) -> frozenset[Root]:
    """All positive roots in the rational span of ``generators``."""
    gens = list(generators)
    index = system._index()
    for g in gens:
        if g.coefficients not in index:
            raise ValueError(f"{g} is not a positive root of {system.family}")
    basis = EchelonBasis(system.rank, [g.coefficients for g in gens])
    return frozenset(a for a in system.positive_roots if basis.contains(a.coefficients))


def span_rank(roots: Iterable[Root], rank: int) -> int:
    return EchelonBasis(rank, [a.coefficients for a in roots]).rank


def vanishing_subsystem(system: RestrictedRootSystem, vs: Sequence[Covector]) -> frozenset[Root]:
    if not vs:
        raise ValueError("need at least one covector")
    return frozenset(a for a in system.positive_roots if all(evaluate(a, v) == 0 for v in vs))


def support_closure(system: RestrictedRootSystem, nodes: Iterable[int]) -> tuple[Root, ...]:
    """Roots supported on a set of simple nodes (0-based): the parabolic subsystem they generate."""
    keep = frozenset(nodes)
    return tuple(a for a in system.positive_roots if a.support <= keep)


def connected_components(system: RestrictedRootSystem, nodes: Iterable[int]) -> list[tuple[int, ...]]:
    keep = sorted(set(nodes))
    adj = system.adjacency
    seen: set[int] = set()
    comps = []
    for s in keep:
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in keep:
                if adj[i][j] and j not in seen:
                    seen.add(j)
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps
