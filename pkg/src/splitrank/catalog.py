"""Irreducible symmetric spaces of non-compact type as (diagram, multiplicities).

Each catalog row declares its Dynkin family, a multiplicity pattern in terms of
orbit classes, a name template and the rank range on which it is the canonical
name for its data. Instantiating a row outside that range (SU(2,2), SO(6,C),
SL(2,R), ...) yields an alias of some other canonical entry.

Normal forms: C2 -> B2, D3 -> A3, B1/C1 -> A1, and A1 with multiplicity m is
named H^{m+1}.
"""

from __future__ import annotations

import difflib
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Mapping

from .roots import DOUBLE, LONG, MIDDLE, SHORT, DynkinFamily, RootSystemError, build_root_system

POINT_NAME = "point"


@dataclass(frozen=True)
class MultiplicityMap:
    items: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, mults: Mapping[str, int] | "MultiplicityMap") -> "MultiplicityMap":
        if isinstance(mults, MultiplicityMap):
            return mults
        return cls(tuple(sorted(mults.items())))

    def __getitem__(self, cls_name: str) -> int:
        for k, v in self.items:
            if k == cls_name:
                return v
        raise KeyError(cls_name)

    def get(self, cls_name: str, default: int | None = None) -> int | None:
        try:
            return self[cls_name]
        except KeyError:
            return default

    def as_dict(self) -> dict[str, int]:
        return dict(self.items)

    def __str__(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.items)


@dataclass(frozen=True)
class SymmetricSpaceEntry:
    name: str
    family: DynkinFamily | None
    multiplicities: MultiplicityMap
    param_k: int | None = None
    row: str = field(default="", compare=False)
    param_r: int | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return 0 if self.family is None else self.family.rank

    @property
    def key(self) -> tuple:
        return (self.family, self.multiplicities)

    def __str__(self) -> str:
        return self.name


POINT = SymmetricSpaceEntry(POINT_NAME, None, MultiplicityMap(()), row="point", param_r=0)


class UnknownSpaceError(LookupError):
    def __init__(self, name: str, suggestions: list[str]):
        self.name = name
        self.suggestions = suggestions
        hint = f"; did you mean {suggestions[0]!r}?" if suggestions else ""
        super().__init__(f"unknown symmetric space {name!r}{hint}")


def dimension(entry: SymmetricSpaceEntry) -> int:
    """rank + multiplicity-weighted count of positive restricted roots."""
    if entry.family is None:
        return 0
    system = build_root_system(entry.family)
    counts = Counter(a.orbit_class for a in system.positive_roots)
    return entry.rank + sum(entry.multiplicities[c] * n for c, n in counts.items())


def normalize(family: str, rank: int, mults: Mapping[str, int]) -> tuple[DynkinFamily, MultiplicityMap]:
    """Apply the low-rank isomorphisms B1=C1=A1, C2=B2, D3=A3 and trim BC1."""
    m = dict(mults)
    if family == "B" and rank == 1:
        family, m = "A", {MIDDLE: m[SHORT]}
    elif family == "C" and rank == 1:
        family, m = "A", {MIDDLE: m[LONG]}
    elif family == "C" and rank == 2:
        family = "B"
    elif family == "D" and rank == 3:
        family = "A"
    elif family == "D" and rank <= 2:
        raise RootSystemError(f"D{rank} is not irreducible")
    fam = DynkinFamily(family, rank)
    m = {c: m[c] for c in fam.orbit_classes}
    return fam, MultiplicityMap.of(m)


# ---------------------------------------------------------------------------
# catalog rows

Mults = Callable[[int, int], dict]


@dataclass(frozen=True)
class Row:
    key: str
    family: str
    template: Callable[[int, int], str]
    mults: Mults
    min_rank: int
    max_rank: int | None = None
    k_min: int | None = None  # None: no family parameter
    recover_k: Callable[[Mapping[str, int]], int | None] | None = None
    formal_min_rank: int = 1

    @property
    def has_k(self) -> bool:
        return self.k_min is not None

    def admissible(self, r: int, k: int | None = None) -> bool:
        if r < self.min_rank or (self.max_rank is not None and r > self.max_rank):
            return False
        if self.has_k:
            return k is not None and k >= self.k_min
        return True

    def raw(self, r: int, k: int | None = None) -> tuple[DynkinFamily, MultiplicityMap]:
        return normalize(self.family, r, self.mults(r, k if k is not None else 0))

    def name(self, r: int, k: int | None = None) -> str:
        return self.template(r, k if k is not None else 0)


def _fixed(key, family, rank, name, mults):
    return Row(key, family, lambda r, k: name, lambda r, k: dict(mults), rank, rank, formal_min_rank=rank)


def _half(x: int, d: int) -> int | None:
    return x // d if x % d == 0 and x >= d else None


ROWS: tuple[Row, ...] = (
    Row("SL_R", "A", lambda r, k: f"SL({r + 1},R)/SO({r + 1})", lambda r, k: {MIDDLE: 1}, 2),
    Row("SL_C", "A", lambda r, k: f"SL({r + 1},C)/SU({r + 1})", lambda r, k: {MIDDLE: 2}, 2),
    Row("SU_star", "A", lambda r, k: f"SU*({2 * r + 2})/Sp({r + 1})", lambda r, k: {MIDDLE: 4}, 2),
    _fixed("E6_-26", "A", 2, "E6^{-26}/F4", {MIDDLE: 8}),
    Row(
        "SO_pq", "B", lambda r, k: f"SO_0({r},{r + k})/SO({r})xSO({r + k})",
        lambda r, k: {LONG: 1, SHORT: k}, 2, k_min=1,
        recover_k=lambda m: m.get(SHORT),
    ),
    Row("SO_C_odd", "B", lambda r, k: f"SO({2 * r + 1},C)/SO({2 * r + 1})", lambda r, k: {LONG: 2, SHORT: 2}, 2),
    Row("Sp_R", "C", lambda r, k: f"Sp({r},R)/U({r})", lambda r, k: {SHORT: 1, LONG: 1}, 3),
    Row("SU_rr", "C", lambda r, k: f"SU({r},{r})/S(U({r})xU({r}))", lambda r, k: {SHORT: 2, LONG: 1}, 3),
    Row("Sp_C", "C", lambda r, k: f"Sp({r},C)/Sp({r})", lambda r, k: {SHORT: 2, LONG: 2}, 3),
    Row("SO_star_even", "C", lambda r, k: f"SO*({4 * r})/U({2 * r})", lambda r, k: {SHORT: 4, LONG: 1}, 3),
    Row("Sp_rr", "C", lambda r, k: f"Sp({r},{r})/Sp({r})xSp({r})", lambda r, k: {SHORT: 4, LONG: 3}, 2),
    _fixed("E7_-25", "C", 3, "E7^{-25}/E6xU(1)", {SHORT: 8, LONG: 1}),
    Row("SO_rr", "D", lambda r, k: f"SO_0({r},{r})/SO({r})xSO({r})", lambda r, k: {MIDDLE: 1}, 4,
        formal_min_rank=3),
    Row("SO_C_even", "D", lambda r, k: f"SO({2 * r},C)/SO({2 * r})", lambda r, k: {MIDDLE: 2}, 4,
        formal_min_rank=3),
    Row(
        "SU_pq", "BC", lambda r, k: f"SU({r},{r + k})/S(U({r})xU({r + k}))",
        lambda r, k: {MIDDLE: 2, SHORT: 2 * k, DOUBLE: 1}, 1, k_min=1,
        recover_k=lambda m: _half(m.get(SHORT, 0), 2),
    ),
    Row(
        "Sp_pq", "BC", lambda r, k: f"Sp({r},{r + k})/Sp({r})xSp({r + k})",
        lambda r, k: {MIDDLE: 4, SHORT: 4 * k, DOUBLE: 3}, 1, k_min=1,
        recover_k=lambda m: _half(m.get(SHORT, 0), 4),
    ),
    Row("SO_star_odd", "BC", lambda r, k: f"SO*({4 * r + 2})/U({2 * r + 1})",
        lambda r, k: {MIDDLE: 4, SHORT: 4, DOUBLE: 1}, 2),
    _fixed("E6_-14", "BC", 2, "E6^{-14}/Spin(10)xU(1)", {MIDDLE: 6, SHORT: 8, DOUBLE: 1}),
    _fixed("E6_6", "E6", 6, "E6^6/Sp(4)", {MIDDLE: 1}),
    _fixed("E6_C", "E6", 6, "E6(C)/E6", {MIDDLE: 2}),
    _fixed("E7_7", "E7", 7, "E7^7/SU(8)", {MIDDLE: 1}),
    _fixed("E7_C", "E7", 7, "E7(C)/E7", {MIDDLE: 2}),
    _fixed("E8_8", "E8", 8, "E8^8/SO(16)", {MIDDLE: 1}),
    _fixed("E8_C", "E8", 8, "E8(C)/E8", {MIDDLE: 2}),
    _fixed("F4_4", "F4", 4, "F4^4/Sp(3)xSp(1)", {LONG: 1, SHORT: 1}),
    _fixed("E6_2", "F4", 4, "E6^2/SU(6)xSp(1)", {LONG: 1, SHORT: 2}),
    _fixed("E7_-5", "F4", 4, "E7^{-5}/SO(12)xSp(1)", {LONG: 1, SHORT: 4}),
    _fixed("E8_-24", "F4", 4, "E8^{-24}/E7xSp(1)", {LONG: 1, SHORT: 8}),
    _fixed("F4_C", "F4", 4, "F4(C)/F4", {LONG: 2, SHORT: 2}),
    _fixed("G2_2", "G2", 2, "G2^2/SO(4)", {LONG: 1, SHORT: 1}),
    _fixed("G2_C", "G2", 2, "G2(C)/G2", {LONG: 2, SHORT: 2}),
    Row(
        "H", "A", lambda r, k: f"H^{k + 1}", lambda r, k: {MIDDLE: k}, 1, 1, k_min=1,
        recover_k=lambda m: m.get(MIDDLE),
    ),
)

ROWS_BY_KEY = {row.key: row for row in ROWS}


def _entry(row: Row, r: int, k: int | None) -> SymmetricSpaceEntry:
    fam, mults = row.raw(r, k)
    return SymmetricSpaceEntry(row.name(r, k), fam, mults, k if row.has_k else None, row.key, r)


def catalog_entries(max_rank: int = 10, max_param_k: int = 6) -> list[SymmetricSpaceEntry]:
    """Every canonical row instantiated at all admissible (r, k) within the bounds.

    Rank-one spaces H^n are included for multiplicities up to max(8, max_param_k).
    """
    if max_rank < 1:
        raise ValueError("max_rank must be positive")
    out = []
    for row in ROWS:
        hi = max_rank if row.max_rank is None else min(row.max_rank, max_rank)
        for r in range(row.min_rank, hi + 1):
            if row.key == "H":
                ks = range(1, max(8, max_param_k) + 1)
            elif row.has_k:
                ks = range(row.k_min, max_param_k + 1)
            else:
                ks = [None]
            out.extend(_entry(row, r, k) for k in ks)
    return out


def identify(family: DynkinFamily | str, mults: Mapping[str, int] | MultiplicityMap,
             rank: int | None = None) -> SymmetricSpaceEntry | None:
    """Canonical catalog entry with the given diagram and multiplicities, or None."""
    if isinstance(family, DynkinFamily):
        fam_name, rank = family.family, family.rank
    else:
        fam_name = family
        if rank is None:
            raise ValueError("rank required with a bare family name")
    fam, m = normalize(fam_name, rank, MultiplicityMap.of(mults).as_dict())
    md = m.as_dict()
    for row in ROWS:
        # compare after normalization: Sp(r,r) at r = 2 is stored as B2
        if row.family != fam.family and not (row.family == "C" and fam.family == "B" and fam.rank == 2):
            continue
        if row.recover_k is not None:
            k = row.recover_k(md)
            if k is None:
                continue
        else:
            k = None
        if not row.admissible(fam.rank, k):
            continue
        if row.raw(fam.rank, k) == (fam, m):
            return _entry(row, fam.rank, k)
    return None


def identify_component(family: DynkinFamily | str, mults, rank: int | None = None) -> str:
    entry = identify(family, mults, rank)
    return entry.name if entry is not None else "unnamed"


def instantiate(row_key: str, r: int, k: int | None = None) -> SymmetricSpaceEntry:
    """Row at (r, k), resolved to its canonical entry (r == 0 gives the point)."""
    if r == 0:
        return POINT
    row = ROWS_BY_KEY[row_key]
    if row.admissible(r, k):
        return _entry(row, r, k)
    fam, m = row.raw(r, k)
    entry = identify(fam, m)
    if entry is None:
        return SymmetricSpaceEntry(row.name(r, k), fam, m, k if row.has_k else None, row.key, r)
    return entry


def hyperbolic(n: int) -> SymmetricSpaceEntry:
    return instantiate("H", 1, n - 1)


# ---------------------------------------------------------------------------
# name lookup

def name_key(name: str) -> str:
    s = name.strip().replace("×", "x").replace("\\times", "x")
    s = re.sub(r"\s+", "", s)
    s = s.replace("{", "").replace("}", "").replace("_", "").replace("SO^0", "SO0")
    return s.lower()


@lru_cache(maxsize=8)
def _name_index(bound: int) -> dict[str, SymmetricSpaceEntry]:
    index: dict[str, SymmetricSpaceEntry] = {}
    for e in catalog_entries(bound, bound):
        index[name_key(e.name)] = e
    for row in ROWS:
        hi = bound if row.max_rank is None else row.max_rank
        for r in range(row.formal_min_rank, hi + 1):
            ks = range(row.k_min, bound + 1) if row.has_k else [None]
            for k in ks:
                try:
                    e = instantiate(row.key, r, k)
                except RootSystemError:
                    continue
                index.setdefault(name_key(row.name(r, k)), e)
    index.setdefault(name_key("Sp(2,R)/U(2)"), instantiate("Sp_R", 2))
    index.setdefault("point", POINT)
    # the group alone is enough: "SU(2,2)" for "SU(2,2)/S(U(2)xU(2))"
    for key, e in list(index.items()):
        if "/" in key:
            index.setdefault(key.split("/")[0], e)
    return index


def lookup(name: str) -> SymmetricSpaceEntry:
    nums = [int(x) for x in re.findall(r"\d+", name)]
    bound = max([12] + [x + 1 for x in nums])
    index = _name_index(bound)
    key = name_key(name)
    if key in index:
        return index[key]
    by_key = {name_key(e.name): e.name for e in index.values()}
    close = difflib.get_close_matches(key, list(by_key), n=3, cutoff=0.5)
    raise UnknownSpaceError(name, [by_key[c] for c in close])


def iter_rows() -> Iterator[Row]:
    return iter(ROWS)
