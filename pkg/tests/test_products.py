import random
from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitrank.catalog import catalog_entries, dimension, lookup
from splitrank.products import (
    ForbiddenFactorError,
    ProductSpace,
    fold_profiles,
    has_forbidden_factor,
    irreducible_si,
    min_plus,
    random_products,
    si_profile,
    verify_theorem_brain,
)
from splitrank.srk import profile, splitting_rank, verify_k_srk_inequality

profiles = st.lists(st.integers(0, 50), min_size=1, max_size=6)


def brute_fold(sis):
    """Minimum over every composition, plus the lexicographically least one attaining it."""
    total = sum(len(s) - 1 for s in sis)
    best = []
    for k in range(total + 1):
        comps = [c for c in cartesian(*(range(len(s)) for s in sis)) if sum(c) == k]
        value = min(sum(s[j] for s, j in zip(sis, c)) for c in comps)
        best.append((value, min(c for c in comps if sum(s[j] for s, j in zip(sis, c)) == value)))
    return best


@given(profiles, profiles)
@settings(max_examples=200)
def test_min_plus_commutes(f, g):
    assert min_plus(f, g) == min_plus(g, f)


@given(profiles, profiles, profiles)
@settings(max_examples=200)
def test_min_plus_associates(f, g, h):
    assert min_plus(min_plus(f, g), h) == min_plus(f, min_plus(g, h))


@given(st.lists(profiles, min_size=1, max_size=3))
@settings(max_examples=200)
def test_fold_matches_brute_force(sis):
    values, wit = fold_profiles(sis)
    assert list(zip(values, wit)) == brute_fold(sis)


def test_single_factor_is_irreducible_profile():
    e = lookup("E6^2/SU(6)xSp(1)")
    prof = si_profile(ProductSpace([e]))
    assert prof.values == profile(e).values


def test_k1_max_formula():
    rng = random.Random(3)
    pool = catalog_entries(5, 3)
    for _ in range(50):
        a, b = rng.choice(pool), rng.choice(pool)
        prof = si_profile(ProductSpace([a, b]))
        srk_a, srk_b = splitting_rank(a)[0], splitting_rank(b)[0]
        assert prof.values[1] == max(srk_a + dimension(b), srk_b + dimension(a))


def test_sl5_squared():
    e = lookup("SL(5,R)/SO(5)")
    si = irreducible_si(e)
    assert (dimension(e), si[1], si[2]) == (14, 4, 7)
    prof = si_profile(ProductSpace([e, e]))
    assert prof.si[2] == min(si[2], 2 * si[1]) == 7
    assert verify_theorem_brain(ProductSpace([e, e])).passed


def test_product_invariants():
    for p in random_products(50, seed=11):
        prof = si_profile(p)
        assert prof.si[0] == 0
        assert prof.si[p.rank] == p.dim - p.rank
        assert p.rank == sum(f.rank for f in p.factors)
        assert all(b > a for a, b in zip(prof.si, prof.si[1:]))
        assert all(prof.si[k] >= prof.si[1] + 2 * (k - 1) for k in range(1, p.rank + 1))


def test_consecutive_gap_of_two_does_not_hold():
    # si^k - si^(k-1) >= 2 is stronger than the proven bound and already fails for one factor
    si = irreducible_si(lookup("SL(5,R)/SO(5)"))
    assert si == (0, 4, 7, 9, 10)
    assert si[4] - si[3] == 1
    assert verify_theorem_brain(ProductSpace([lookup("SL(5,R)/SO(5)")])).passed


def test_canonical_order():
    a, b = lookup("SL(5,R)"), lookup("E6^6/Sp(4)")
    assert ProductSpace([a, b]) == ProductSpace([b, a])
    with pytest.raises(ValueError):
        ProductSpace([])


def test_forbidden():
    assert has_forbidden_factor(ProductSpace([lookup("H^2"), lookup("E8^8/SO(16)")])) == (True, "H^2")
    assert has_forbidden_factor(ProductSpace([lookup("SL(5,R)/SO(5)")])) == (False, None)
    bad, witness = has_forbidden_factor(ProductSpace([lookup("Sp(2,R)/U(2)")]))
    assert bad and witness == "SO_0(2,3)/SO(2)xSO(3)"
    with pytest.raises(ForbiddenFactorError):
        verify_theorem_brain(ProductSpace([lookup("G2^2/SO(4)")]))


def test_single_factor_matches_ksrk():
    for e in catalog_entries(6, 3):
        p = ProductSpace([e])
        if has_forbidden_factor(p)[0]:
            continue
        assert verify_theorem_brain(p).passed == verify_k_srk_inequality(e).passed


def test_sweep_is_reproducible():
    assert [p.name for p in random_products(20, 5)] == [p.name for p in random_products(20, 5)]
    for p in random_products(50, 5):
        assert not has_forbidden_factor(p)[0]
        assert 1 <= len(p.factors) <= 3 and all(f.rank <= 6 for f in p.factors)
