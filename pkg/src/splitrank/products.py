"""Reducible spaces: splitting-index profiles of products by min-plus convolution."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .catalog import MultiplicityMap, SymmetricSpaceEntry, catalog_entries, dimension
from .roots import MIDDLE, DynkinFamily
from .srk import KNOWN_EXCEPTIONS, product_name, profile


@dataclass(frozen=True)
class ProductSpace:
    factors: tuple[SymmetricSpaceEntry, ...]

    def __init__(self, factors: Iterable[SymmetricSpaceEntry]):
        fs = tuple(sorted(factors, key=lambda e: e.name))
        if not fs:
            raise ValueError("a product needs at least one factor")
        if any(f.rank < 1 for f in fs):
            raise ValueError("factors must have rank >= 1")
        object.__setattr__(self, "factors", fs)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def dim(self) -> int:
        return sum(dimension(f) for f in self.factors)

    @property
    def name(self) -> str:
        return product_name([f.name for f in self.factors])

    def __str__(self) -> str:
        return self.name


def min_plus(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """(f # g)[k] = min_j f[j] + g[k-j]."""
    return tuple(
        min(f[j] + g[k - j] for j in range(max(0, k - len(g) + 1), min(k, len(f) - 1) + 1))
        for k in range(len(f) + len(g) - 1)
    )


_SI_MEMO: dict[str, tuple[int, ...]] = {}


def irreducible_si(entry: SymmetricSpaceEntry) -> tuple[int, ...]:
    si = _SI_MEMO.get(entry.name)
    if si is None:
        si = profile(entry).si
        _SI_MEMO[entry.name] = si
    return si


@dataclass(frozen=True)
class ProductProfile:
    dim: int
    si: tuple[int, ...]
    witnesses: tuple[tuple[int, ...], ...]  # composition (j_1, ..., j_s) per k

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(self.dim - s for s in self.si)

    @property
    def rank(self) -> int:
        return len(self.si) - 1

    def to_json(self) -> dict:
        return {
            "values": list(self.values),
            "si": list(self.si),
            "witnesses": [list(w) for w in self.witnesses],
        }


def fold_profiles(profiles: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Left fold of min-plus convolution keeping the lexicographically least optimal composition."""
    best: list[tuple[int, tuple[int, ...]]] = [(0, ())]
    for si in profiles:
        nxt = []
        for k in range(len(best) + len(si) - 1):
            nxt.append(min(
                (best[k - j][0] + si[j], best[k - j][1] + (j,))
                for j in range(max(0, k - len(best) + 1), min(k, len(si) - 1) + 1)
            ))
        best = nxt
    return tuple(v for v, _ in best), tuple(w for _, w in best)


def si_profile(p: ProductSpace) -> ProductProfile:
    si, wit = fold_profiles([irreducible_si(f) for f in p.factors])
    return ProductProfile(p.dim, si, wit)


FORBIDDEN = {(DynkinFamily("A", 1), MultiplicityMap.of({MIDDLE: 1})), *KNOWN_EXCEPTIONS}


def has_forbidden_factor(p: ProductSpace) -> tuple[bool, str | None]:
    for f in p.factors:
        if f.key in FORBIDDEN:
            return True, f.name
    return False, None


class ForbiddenFactorError(ValueError):
    def __init__(self, factor: str):
        self.factor = factor
        super().__init__(f"product has an excluded factor: {factor}")


@dataclass(frozen=True)
class BrainCheck:
    k: int
    si_k: int
    bound: int
    ok: bool
    composition: tuple[int, ...]


@dataclass(frozen=True)
class BrainReport:
    product: ProductSpace
    checks: tuple[BrainCheck, ...]
    excluded_factor: str | None = None

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_theorem_brain(p: ProductSpace, allow_excluded: bool = False) -> BrainReport:
    """si^k >= si^1 + 2(k-1) for k = 1..rank."""
    bad, witness = has_forbidden_factor(p)
    if bad and not allow_excluded:
        raise ForbiddenFactorError(witness)
    prof = si_profile(p)
    checks = []
    for k in range(1, p.rank + 1):
        bound = prof.si[1] + 2 * (k - 1)
        checks.append(BrainCheck(k, prof.si[k], bound, prof.si[k] >= bound, prof.witnesses[k]))
    return BrainReport(p, tuple(checks), witness)


def random_products(count: int, seed: int = 0, max_factors: int = 3, max_factor_rank: int = 6,
                    allow_excluded: bool = False) -> list[ProductSpace]:
    pool = [e for e in catalog_entries(max_factor_rank, 6) if allow_excluded or e.key not in FORBIDDEN]
    rng = random.Random(seed)
    return [ProductSpace(rng.choice(pool) for _ in range(rng.randint(1, max_factors))) for _ in range(count)]
