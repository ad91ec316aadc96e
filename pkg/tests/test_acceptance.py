"""One test per acceptance criterion. Each records a PASS/FAIL line before asserting."""

import random
import time

from conftest import ACCEPTANCE_LINES

from splitrank.catalog import catalog_entries, dimension, lookup
from splitrank.hall import (
    build_instance,
    check_result,
    find_matching,
    hall_violations,
    random_frames,
    verify_cardinality,
)
from splitrank.products import ProductSpace, fold_profiles, has_forbidden_factor, min_plus
from splitrank.srk import (
    KNOWN_EXCEPTIONS,
    oracle_splitting_rank_k,
    profile,
    splitting_rank,
    splitting_rank_k,
)
from splitrank.tables import CORRECTIONS, TABLE1
from splitrank.verify import verify_brain, verify_ksrk, verify_table1, verify_table2

CLASSICAL = {"A", "B", "C", "D", "BC"}


def record(n, ok, detail):
    ACCEPTANCE_LINES.append(f"CRITERION {n}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_table1():
    t0 = time.perf_counter()
    checks = verify_table1(10, 6)
    elapsed = time.perf_counter() - t0
    bad = [c for c in checks if c.expected["srk"] != c.got["srk"] or c.expected["Y"] != c.got["Y"]]
    anchors = {name: splitting_rank(lookup(name))[0]
               for name in ("E8(C)/E8", "SO*(12)/U(6)", "E6^{-14}/Spin(10)xU(1)")}
    ok = not bad and list(anchors.values()) == [134, 15, 11] and elapsed < 5
    record(1, ok, f"{len(TABLE1)} rows, {len(checks)} spaces, {len(bad)} mismatches, anchors {anchors}, "
                  f"{elapsed:.2f}s")


def test_criterion_2_table2():
    checks = verify_table2(10, 6)
    bad = [c for c in checks if not c.ok]
    noted = sorted({c.space for c in checks if c.note})
    sp5 = next(c for c in checks if c.space == "Sp(5,R)/U(5)")
    ok = not bad and sp5.got["Y'"] == ["H^2 x Sp(3,R)/U(3)", "SL(5,R)/SO(5)"] and \
        "SO_0(7,7)/SO(7)xSO(7)" in noted
    record(2, ok, f"{len(checks)} spaces, {len(bad)} mismatches; corrected rows checked: {', '.join(noted)} "
                  f"({len(CORRECTIONS)} corrections listed)")


def test_criterion_3_dimension():
    checks = verify_table1(10, 6)
    bad = [c.space for c in checks if c.expected["n"] != c.got["n"]]
    record(3, not bad, f"{len(checks)} spaces, dimension mismatches: {bad or 'none'}")


def test_criterion_4_srk_bound():
    entries = catalog_entries(10, 6)
    bad = []
    equal = 0
    for e in entries:
        srk, n, r = splitting_rank(e)[0], dimension(e), e.rank
        sl = e.family.family == "A" and e.multiplicities.as_dict() == {"middle": 1}
        equal += srk == n - r
        if srk > n - r or (srk == n - r) != sl:
            bad.append(e.name)
    record(4, not bad, f"{len(entries)} entries, equality on {equal} (the SL(r+1,R) rows), violations: {bad or 'none'}")


def test_criterion_5_profile():
    entries = catalog_entries(8, 6)
    bad = []
    for e in entries:
        v = profile(e).values
        if v[0] != dimension(e) or v[-1] != e.rank or any(b >= a for a, b in zip(v, v[1:])):
            bad.append(e.name)
    record(5, not bad, f"{len(entries)} entries of rank <= 8, failures: {bad or 'none'}")


def test_criterion_6_oracle():
    entries = [e for e in catalog_entries(5, 6) if e.rank <= 4 or e.family.family in CLASSICAL]
    pairs = bad = 0
    families = set()
    for e in entries:
        families.add(e.family.family)
        for k in range(1, e.rank + 1):
            pairs += 1
            bad += oracle_splitting_rank_k(e, k) != splitting_rank_k(e, k)[0]
    e6 = lookup("E6(C)/E6")
    e6_ok = all(oracle_splitting_rank_k(e6, k, rank_bound=6) == splitting_rank_k(e6, k)[0] for k in range(1, 7))
    ok = not bad and e6_ok and {"A", "B", "C", "D", "BC", "F4", "G2"} <= families
    record(6, ok, f"{len(entries)} entries, {pairs} (entry, k) pairs, {bad} disagreements, "
                  f"families {sorted(families)}; E6(C)/E6 all k: {'agree' if e6_ok else 'DISAGREE'} "
                  f"(E-types have rank >= 6, see ledger)")


def test_criterion_7_ksrk():
    reports = verify_ksrk(10, 6)
    flagged = sorted((r.entry.name, c.k) for r in reports for c in r.failures if c.known_exception)
    unexpected = [(r.entry.name, c.k) for r in reports for c in r.failures if not c.known_exception]
    expected = sorted((lookup(name).name, k) for name, k in
                      [("SL(3,R)/SO(3)", 2), ("Sp(2,R)/U(2)", 2), ("G2^2/SO(4)", 2), ("SL(4,R)/SO(4)", 3)])
    ok = not unexpected and flagged == expected and len(KNOWN_EXCEPTIONS) == 4
    record(7, ok, f"{len(reports)} entries; flagged exceptions {flagged}; unexpected failures {unexpected or 'none'}")


def test_criterion_8_products():
    reports = verify_brain(200, 0)
    bad = [r.product.name for r in reports if not r.passed]
    admissible = all(not has_forbidden_factor(r.product)[0] and len(r.product.factors) <= 3
                     and all(f.rank <= 6 for f in r.product.factors) for r in reports)
    rng = random.Random(0)
    prop_bad = 0
    for _ in range(100):
        f, g, h = ([rng.randint(0, 60) for _ in range(rng.randint(1, 7))] for _ in range(3))
        prop_bad += min_plus(f, g) != min_plus(g, f)
        prop_bad += min_plus(min_plus(f, g), h) != min_plus(f, min_plus(g, h))
        prop_bad += fold_profiles([f, g, h])[0] != fold_profiles([h, f, g])[0]
    ok = not bad and admissible and len(reports) == 200 and not prop_bad
    record(8, ok, f"200 products (seed 0), {len(bad)} failed; min-plus laws on 100 triples: {prop_bad} violations")


def test_criterion_9_hall():
    t0 = time.perf_counter()
    entries = [e for e in catalog_entries(5, 6) if not has_forbidden_factor(ProductSpace([e]))[0]]
    frames = failures = dual_checked = 0
    for e in entries:
        srk = splitting_rank(e)[0]
        for fr in random_frames(e.rank, 100, seed=0):
            frames += 1
            rep = verify_cardinality(e, fr, srk)
            inst = build_instance(e, fr, srk)
            res = find_matching(inst)
            check_result(inst, res)
            failures += not (rep.passed and res.feasible)
            if len(inst.demands) <= 4 and len(inst.slots) <= 16:
                dual_checked += 1
                failures += res.feasible == bool(hall_violations(inst))

    sp = lookup("Sp(2,R)/U(2)")
    fr = random_frames(2, 1, seed=0)[0]
    rep = verify_cardinality(sp, fr)
    res = find_matching(build_instance(sp, fr))
    sp_ok = [(v.subset, v.q_dim, v.bound) for v in rep.violations] == [((0, 1), 4, 5)] \
        and not res.feasible and res.deficient == (0, 1)

    from test_hall import random_instance
    rng = random.Random(2)
    abstract = 0
    for _ in range(2000):
        inst = random_instance(rng, 4, 16)
        r = find_matching(inst)
        check_result(inst, r)
        abstract += r.feasible == bool(hall_violations(inst))
    elapsed = time.perf_counter() - t0
    ok = not failures and sp_ok and not abstract and elapsed < 30
    record(9, ok, f"{len(entries)} entries x 100 frames = {frames}, {failures} failures; "
                  f"duality checked on {dual_checked} suite + 2000 random instances ({abstract} mismatches); "
                  f"Sp(2,R)/U(2) violation at {{1,2}} with certificate: {'yes' if sp_ok else 'NO'}; {elapsed:.1f}s")
