import random
from itertools import combinations

import pytest

from splitrank.catalog import catalog_entries, dimension, lookup
from splitrank.hall import (
    MatchingInstance,
    build_instance,
    check_result,
    find_matching,
    hall_violations,
    q_sum_dim,
    random_frames,
    vanishing_weight,
    verify_cardinality,
)
from splitrank.roots import Covector


def brute_feasible(inst: MatchingInstance) -> bool:
    """Try every way of handing each left node its demand in unused slots."""
    def go(u, used):
        if u == len(inst.demands):
            return True
        free = sorted(inst.adjacency[u] - used)
        return any(go(u + 1, used | set(pick)) for pick in combinations(free, inst.demands[u]))
    return go(0, frozenset())


def random_instance(rng, max_left=4, max_slots=12):
    nleft = rng.randint(1, max_left)
    nslots = rng.randint(0, max_slots)
    p = rng.random()
    adj = tuple(frozenset(s for s in range(nslots) if rng.random() < p) for _ in range(nleft))
    return MatchingInstance(tuple(rng.randint(1, 4) for _ in range(nleft)),
                            tuple(((s,), 1) for s in range(nslots)), adj)


def dual_frame(r, i):
    return Covector([1 if j == i else 0 for j in range(r)])


def test_full_frame_is_n_minus_r():
    e = lookup("E6^2/SU(6)xSp(1)")
    fr = random_frames(e.rank, 1, seed=4)[0]
    assert q_sum_dim(e, fr, range(e.rank)) == dimension(e) - e.rank


@pytest.mark.parametrize("r", range(2, 8))
def test_single_dual_covector(r):
    from splitrank.catalog import instantiate
    e = instantiate("SL_R", r)
    assert q_sum_dim(e, [dual_frame(r, r - 1)], [0]) == r


def test_zero_covector():
    e = lookup("SL(4,R)")
    assert q_sum_dim(e, [Covector([0, 0, 0])], [0]) == 0
    with pytest.raises(ValueError):
        q_sum_dim(e, [Covector([0, 0, 0])], [])


def test_complement_and_monotonicity():
    for e in catalog_entries(4, 2):
        n, r = dimension(e), e.rank
        for fr in random_frames(r, 5, seed=r):
            for k in range(1, r + 1):
                for sub in combinations(range(r), k):
                    q = q_sum_dim(e, fr, sub)
                    assert q + vanishing_weight(e, fr, sub) == n - r
                    for extra in set(range(r)) - set(sub):
                        assert q_sum_dim(e, fr, sub + (extra,)) >= q


def test_rational_covectors():
    e = lookup("SL(3,R)")
    half = [Covector(["1/2", "-1/2"]), Covector(["1/3", "1"])]
    assert q_sum_dim(e, half, [0]) == q_sum_dim(e, [Covector([1, -1])], [0])


def test_sp2r_violation_and_certificate():
    e = lookup("Sp(2,R)/U(2)")
    fr = random_frames(2, 1, seed=0)[0]
    rep = verify_cardinality(e, fr)
    assert rep.n == 6 and rep.srk == 3
    assert [(v.subset, v.q_dim, v.bound) for v in rep.violations] == [((0, 1), 4, 5)]
    res = find_matching(build_instance(e, fr))
    assert not res.feasible and res.deficient == (0, 1)


def test_non_spanning_frame():
    e = lookup("SL(3,R)")
    with pytest.raises(ValueError):
        verify_cardinality(e, [Covector([1, 1]), Covector([2, 2])])


def test_frames_span_and_reproduce():
    a = random_frames(4, 10, seed=9)
    assert a == random_frames(4, 10, seed=9)
    for fr in a:
        assert all(-3 <= x <= 3 for v in fr for x in v.values)


def test_instance_shape():
    e = lookup("SL(5,R)/SO(5)")
    fr = [dual_frame(4, i) for i in range(4)]
    inst = build_instance(e, fr)
    assert len(inst.slots) == dimension(e) - e.rank == 10
    assert inst.total_demand == 2 * 4 + (14 - 10) - 2 == 10
    one = build_instance(e, fr[:1])
    assert one.demands == (4,)
    older = build_instance(e, fr, first_demand="rank")
    assert older.demands == (4, 2, 2, 2)
    with pytest.raises(ValueError):
        build_instance(e, fr, first_demand="other")


def test_slot_copies_share_neighbors():
    e = lookup("SU(2,4)")
    inst = build_instance(e, random_frames(2, 1, seed=2)[0])
    by_root = {}
    for s, (root, _) in enumerate(inst.slots):
        by_root.setdefault(root, []).append(frozenset(u for u, adj in enumerate(inst.adjacency) if s in adj))
    assert all(len(set(v)) == 1 for v in by_root.values())


def test_demand_exceeds_slots():
    inst = MatchingInstance((3, 3), tuple(((s,), 1) for s in range(4)), (frozenset(range(4)),) * 2)
    res = find_matching(inst)
    assert not res.feasible and res.deficient == (0, 1)


def test_duality_and_brute_force():
    rng = random.Random(0)
    for _ in range(2000):
        inst = random_instance(rng)
        res = find_matching(inst)
        check_result(inst, res)
        assert res.feasible == (not hall_violations(inst))
        assert res.feasible == brute_feasible(inst)


def test_duality_up_to_sixteen_slots():
    rng = random.Random(1)
    for _ in range(1000):
        inst = random_instance(rng, 4, 16)
        res = find_matching(inst)
        check_result(inst, res)
        assert res.feasible == (not hall_violations(inst))


def test_admissible_frames_match():
    for name in ["SL(5,R)/SO(5)", "E6^6/Sp(4)", "SO*(10)/U(5)", "F4^4/Sp(3)xSp(1)"]:
        e = lookup(name)
        for fr in random_frames(e.rank, 20, seed=1):
            assert verify_cardinality(e, fr).passed
            res = find_matching(build_instance(e, fr))
            assert res.feasible
            check_result(build_instance(e, fr), res)
