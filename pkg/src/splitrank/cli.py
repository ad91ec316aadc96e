"""Command-line front end: ``splitrank <command> [options]``.

Every command can print text, CSV or JSON (``--format``, or the
SPLITRANK_FORMAT environment variable). JSON output always carries
``"schema_version": 1``. Verification commands exit 1 when any row fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import catalog
from .catalog import ROWS_BY_KEY, SymmetricSpaceEntry, UnknownSpaceError, dimension, lookup
from .hall import build_instance, find_matching, random_frames, slot_label, verify_cardinality
from .products import ProductSpace, has_forbidden_factor, si_profile, verify_theorem_brain
from .roots import FAMILIES, FIXED_RANKS, Covector, DynkinFamily, RootSystemError, build_root_system
from .srk import gap_table, profile, splitting_rank, splitting_rank_k
from .verify import asserted, verify_brain, verify_ksrk, verify_table1, verify_table2

SCHEMA_VERSION = 1
FORMATS = ("text", "csv", "json")


@dataclass(frozen=True)
class RunConfig:
    max_rank: int = 10
    max_param_k: int = 6
    oracle_rank_bound: int = 5
    sweep_count: int = 200
    seed: int = 0
    format: str = "text"

    def __post_init__(self):
        for name in ("max_rank", "max_param_k", "oracle_rank_bound", "sweep_count"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output

class Out:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream

    def emit(self, payload: dict, header: Sequence[str], rows: Sequence[Sequence], text: Sequence[str]) -> None:
        if self.fmt == "json":
            self.stream.write(json.dumps({"schema_version": SCHEMA_VERSION, **payload}) + "\n")
        elif self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
            self.stream.write(buf.getvalue())
        else:
            for line in text:
                self.stream.write(line + "\n")


def _removed(t) -> int | list[int]:
    r = t.removed
    return r[0] if len(r) == 1 else r


def _maximizers_json(results) -> list[dict]:
    return [t.to_json() for t in results]


def _join(names) -> str:
    return " | ".join(names)


# ---------------------------------------------------------------------------
# space selection

def _parse_mults(family: DynkinFamily, text: str) -> dict[str, int]:
    classes = family.orbit_classes
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if all("=" in p for p in parts):
        return {k.strip(): int(v) for k, v in (p.split("=") for p in parts)}
    if len(parts) == 1:
        return {c: int(parts[0]) for c in classes}
    if len(parts) != len(classes):
        raise UsageError(f"{family} needs multiplicities for {', '.join(classes)}")
    return dict(zip(classes, map(int, parts)))


def resolve_space(args) -> SymmetricSpaceEntry:
    if getattr(args, "space", None):
        return lookup(args.space)
    row = getattr(args, "row", None)
    fam = getattr(args, "family", None)
    rank = getattr(args, "rank", None)
    k = getattr(args, "k_param", None)
    if row:
        if row not in ROWS_BY_KEY:
            raise UsageError(f"unknown row {row!r}; rows: {', '.join(ROWS_BY_KEY)}")
        r = rank if rank is not None else ROWS_BY_KEY[row].min_rank
        return catalog.instantiate(row, r, k)
    if fam:
        if rank is None:
            rank = FIXED_RANKS.get(fam)
            if rank is None:
                raise UsageError("--rank is required for classical families")
        family = DynkinFamily(fam, rank)
        mult = getattr(args, "mult", None)
        if mult:
            fam_n, m = catalog.normalize(fam, rank, _parse_mults(family, mult))
            e = catalog.identify(fam_n, m)
            return e if e is not None else SymmetricSpaceEntry("unnamed", fam_n, m)
        rows = [r for r in catalog.ROWS if r.family == fam and (r.has_k == (k is not None)) and r.key != "H"]
        if k is not None and len(rows) == 1:
            return catalog.instantiate(rows[0].key, rank, k)
        raise UsageError("give --mult, or --row with --rank/--k, to pick a space of this family")
    raise UsageError("give --space NAME, --row KEY, or --family/--rank")


def _space_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--space", help='space name, e.g. "E7(C)/E7" or "SU(2,2)"')
    p.add_argument("--row", help="catalog row key, e.g. SO_pq (see `catalog`)")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--rank", type=int)
    p.add_argument("--k", dest="k_param", type=int, help="row parameter k")
    p.add_argument("--mult", help='multiplicities: "2", "1,4" (in orbit-class order) or "long=1,short=4"')


def _entry_json(e: SymmetricSpaceEntry) -> dict:
    return {"space": e.name, "r": e.rank}


# ---------------------------------------------------------------------------
# commands

def cmd_catalog(args, cfg: RunConfig, out: Out) -> int:
    entries = catalog.catalog_entries(cfg.max_rank, cfg.max_param_k)
    rows = [(e.name, e.row, e.family.family, e.rank, "" if e.param_k is None else e.param_k,
             dimension(e), str(e.multiplicities)) for e in entries]
    out.emit(
        {"entries": [{"name": e.name, "row": e.row, "family": e.family.family, "r": e.rank, "k": e.param_k,
                      "n": dimension(e), "multiplicities": e.multiplicities.as_dict()} for e in entries]},
        ("name", "row", "family", "r", "k", "n", "multiplicities"), rows,
        [f"{n:<44} {row:<13} {f}{r:<3} n={d:<4} {m}" for n, row, f, r, _, d, m in rows],
    )
    return 0


def cmd_dim(args, cfg, out) -> int:
    e = resolve_space(args)
    n = dimension(e)
    out.emit({**_entry_json(e), "n": n}, ("space", "r", "n"), [(e.name, e.rank, n)], [str(n)])
    return 0


def cmd_dump_roots(args, cfg, out) -> int:
    if args.space or args.row or args.mult:
        fam = resolve_space(args).family
    elif args.family:
        fam = DynkinFamily(args.family, args.rank if args.rank is not None else FIXED_RANKS.get(args.family, 0))
    else:
        raise UsageError("give --family/--rank or a space")
    system = build_root_system(fam)
    roots = system.positive_roots
    out.emit(
        {**system.to_json(), "cartan": [list(r) for r in system.cartan_matrix]},
        ("root", "class", "height"),
        [(" ".join(map(str, a.coefficients)), a.orbit_class, a.height) for a in roots],
        [f"{fam}: {len(roots)} positive roots"] + [f"  {a} {a.orbit_class}" for a in roots],
    )
    return 0


def cmd_srk(args, cfg, out) -> int:
    e = resolve_space(args)
    srk, best = splitting_rank(e)
    out.emit(
        {**_entry_json(e), "srk": srk, "maximizers": _maximizers_json(best)},
        ("space", "r", "srk", "removed", "components", "dim"),
        [(e.name, e.rank, srk, _removed(t), _join(t.names), t.dim_total) for t in best],
        [f"{e.name}: srk = {srk}"] + [f"  remove node {_removed(t)}: Y = {t.y_name}" for t in best],
    )
    return 0


def cmd_srk_k(args, cfg, out) -> int:
    e = resolve_space(args)
    try:
        value, best = splitting_rank_k(e, args.kth)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.emit(
        {**_entry_json(e), "k": args.kth, "srk": value, "maximizers": _maximizers_json(best)},
        ("space", "r", "k", "srk", "removed", "components", "dim"),
        [(e.name, e.rank, args.kth, value, " ".join(map(str, t.removed)), _join(t.names), t.dim_total)
         for t in best],
        [f"{e.name}: srk^{args.kth} = {value}"]
        + [f"  remove nodes {t.removed}: Y = {t.y_name}" for t in best],
    )
    return 0


def cmd_gap(args, cfg, out) -> int:
    e = resolve_space(args)
    if e.rank < 2:
        raise UsageError("gap needs rank >= 2")
    g = gap_table(e)
    text = [f"{e.name}: srk = {g.srk}"]
    if g.has_gap:
        text.append(f"  gap = {g.gap} (second largest {g.second})")
        text += [f"  remove node {_removed(t)}: Y' = {t.y_name}" for t in g.second_maximizers]
    else:
        text.append("  no gap: every truncation reaches srk")
    out.emit(
        {**_entry_json(e), "srk": g.srk, "gap": g.gap, "second": g.second,
         "maximizers": _maximizers_json(g.second_maximizers)},
        ("space", "r", "srk", "gap", "removed", "components", "dim"),
        [(e.name, e.rank, g.srk, g.gap, _removed(t), _join(t.names), t.dim_total) for t in g.second_maximizers]
        or [(e.name, e.rank, g.srk, "", "", "", "")],
        text,
    )
    return 0


def cmd_profile(args, cfg, out) -> int:
    e = resolve_space(args)
    p = profile(e)
    out.emit(
        {**_entry_json(e), **p.to_json()},
        ("k", "srk", "si"),
        [(k, v, s) for k, (v, s) in enumerate(zip(p.values, p.si))],
        [f"{e.name}: n = {p.n}, r = {p.rank}"] + [f"  k={k}: srk^k = {v}, si^k = {s}"
                                                  for k, (v, s) in enumerate(zip(p.values, p.si))],
    )
    return 0


def _factor(text: str) -> SymmetricSpaceEntry:
    """NAME, or ROW:r[,k] for a catalog row at given parameters."""
    head, sep, params = text.partition(":")
    if sep and head in ROWS_BY_KEY:
        nums = [int(x) for x in params.split(",") if x.strip()]
        return catalog.instantiate(head, nums[0], nums[1] if len(nums) > 1 else None)
    return lookup(text)


def cmd_product(args, cfg, out) -> int:
    p = ProductSpace(_factor(f) for f in args.factor)
    prof = si_profile(p)
    forbidden, witness = has_forbidden_factor(p)
    payload = {"space": p.name, "r": p.rank, "n": p.dim, **prof.to_json(), "excluded_factor": witness}
    text = [f"{p.name}: n = {p.dim}, r = {p.rank}"]
    text += [f"  k={k}: srk^k = {v}, si^k = {s}, composition {list(w)}"
             for k, (v, s, w) in enumerate(zip(prof.values, prof.si, prof.witnesses))]
    if forbidden:
        text.append(f"  excluded factor {witness}: inequality not asserted")
    else:
        rep = verify_theorem_brain(p)
        payload["inequality_holds"] = rep.passed
        text.append(f"  si^k >= si^1 + 2(k-1) for all k: {'yes' if rep.passed else 'NO'}")
    out.emit(payload, ("k", "srk", "si", "composition"),
             [(k, v, s, " ".join(map(str, w)))
              for k, (v, s, w) in enumerate(zip(prof.values, prof.si, prof.witnesses))], text)
    return 0


def _table_verify(checks, out, title) -> int:
    failed = [c for c in checks if not c.ok]
    text = []
    for c in checks:
        status = "ok  " if c.ok else "FAIL"
        line = f"{status} {c.space}: {c.got}"
        if not c.ok:
            line += f"  expected {c.expected}"
        if c.note:
            line += f"  [{c.note}]"
        text.append(line)
    text.append(f"{title}: {len(checks)} rows, {len(failed)} failed")
    header = ("space", "row", "r", "k", "ok", "expected", "got", "note")
    rows = [(c.space, c.row, c.r, "" if c.k is None else c.k, c.ok, json.dumps(c.expected), json.dumps(c.got), c.note)
            for c in checks]
    out.emit({"rows": [c.to_json() for c in checks], "failed": len(failed)}, header, rows, text)
    return 1 if failed else 0


def cmd_verify_table1(args, cfg, out) -> int:
    return _table_verify(verify_table1(cfg.max_rank, cfg.max_param_k), out, "splitting-rank table")


def cmd_verify_table2(args, cfg, out) -> int:
    return _table_verify(verify_table2(cfg.max_rank, cfg.max_param_k), out, "gap table")


def cmd_verify_ksrk(args, cfg, out) -> int:
    reports = verify_ksrk(cfg.max_rank, cfg.max_param_k)
    rows, text = [], []
    failed = 0
    for rep in reports:
        for c in rep.checks:
            rows.append((rep.entry.name, c.k, c.srk_k, c.bound, c.ok, c.known_exception))
            if not c.ok:
                tag = "known exception" if c.known_exception else "FAIL"
                text.append(f"{tag}: {rep.entry.name} k={c.k}: srk^k = {c.srk_k} > {c.bound}")
        failed += not rep.passed
    text.append(f"k-th splitting rank inequality: {len(reports)} spaces, {failed} failed")
    out.emit(
        {"spaces": [{"space": rep.entry.name, "srk": rep.srk, "passed": rep.passed,
                     "checks": [{"k": c.k, "srk_k": c.srk_k, "bound": c.bound, "ok": c.ok,
                                 "known_exception": c.known_exception} for c in rep.checks]}
                    for rep in reports],
         "failed": failed},
        ("space", "k", "srk_k", "bound", "ok", "known_exception"), rows, text,
    )
    return 1 if failed else 0


def cmd_verify_brain(args, cfg, out) -> int:
    reports = verify_brain(cfg.sweep_count, cfg.seed, args.allow_excluded)
    failed = [r for r in reports if not r.passed and asserted(r)]
    unasserted = [r for r in reports if not r.passed and not asserted(r)]
    text = [f"{'FAIL' if asserted(r) else 'excluded, not asserted'}: {r.product.name} at k="
            + ",".join(str(c.k) for c in r.checks if not c.ok) for r in failed + unasserted]
    text.append(f"product sweep (seed {cfg.seed}): {len(reports)} products, {len(failed)} failed"
                + (f", {len(unasserted)} excluded products violate" if args.allow_excluded else ""))
    out.emit(
        {"seed": cfg.seed, "products": [
            {"space": r.product.name, "passed": r.passed, "asserted": asserted(r),
             "checks": [{"k": c.k, "si_k": c.si_k, "bound": c.bound, "ok": c.ok,
                         "composition": list(c.composition)} for c in r.checks]} for r in reports],
         "failed": len(failed)},
        ("space", "passed", "asserted"), [(r.product.name, r.passed, asserted(r)) for r in reports], text,
    )
    return 1 if failed else 0


def cmd_hall_check(args, cfg, out) -> int:
    e = resolve_space(args)
    srk = splitting_rank(e)[0]
    frames = random_frames(e.rank, args.frames, cfg.seed)
    rows = []
    bad = 0
    for i, fr in enumerate(frames):
        rep = verify_cardinality(e, fr, srk)
        res = find_matching(build_instance(e, fr, srk, args.first_demand))
        bad += not (rep.passed and res.feasible)
        rows.append((i, rep.passed, res.feasible,
                     ";".join(",".join(str(i + 1) for i in v.subset) for v in rep.violations),
                     " ".join(str(u + 1) for u in res.deficient or ())))
    text = [f"frame {i}: cardinality {'ok' if c else 'VIOLATED at ' + v}, "
            f"matching {'ok' if m else 'infeasible, deficient ' + d}"
            for i, c, m, v, d in rows if not (c and m)]
    text.append(f"{e.name}: {len(frames)} frames (seed {cfg.seed}), {bad} with a violation")
    out.emit(
        {**_entry_json(e), "srk": srk, "seed": cfg.seed, "frames": [
            {"frame": i, "cardinality_ok": c, "matching_ok": m} for i, c, m, _, _ in rows], "failed": bad},
        ("frame", "cardinality_ok", "matching_ok", "violating_subsets", "deficient"), rows, text,
    )
    return 1 if bad else 0


def _parse_frame(text: str) -> list[Covector]:
    try:
        return [Covector(Fraction(x.strip()) for x in part.split(",")) for part in text.split(";") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad frame {text!r}: {exc}") from exc


def cmd_match(args, cfg, out) -> int:
    e = resolve_space(args)
    frame = _parse_frame(args.frame)
    try:
        inst = build_instance(e, frame, None, args.first_demand)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    res = find_matching(inst)
    if res.feasible:
        assign = [{"covector": u + 1, "demand": inst.demands[u],
                   "slots": [list(slot_label(inst, s)) for s in slots]} for u, slots in enumerate(res.assignment)]
        payload = {**_entry_json(e), "feasible": True, "assignment": assign}
        rows = [(a["covector"], a["demand"], " ".join(f"{tuple(r)}#{c}" for r, c in a["slots"])) for a in assign]
        text = [f"{e.name}: matching found"] + [f"  v{a}: {s}" for a, _, s in rows]
    else:
        nodes = [u + 1 for u in res.deficient]
        payload = {**_entry_json(e), "feasible": False, "deficient": nodes}
        rows = [(u, inst.demands[u - 1], "") for u in nodes]
        text = [f"{e.name}: no matching; covectors {nodes} demand "
                f"{sum(inst.demands[u - 1] for u in nodes)} but reach fewer slots"]
    out.emit(payload, ("covector", "demand", "slots"), rows, text)
    return 0


COMMANDS = {
    "catalog": (cmd_catalog, "list catalog spaces"),
    "dim": (cmd_dim, "dimension of a space"),
    "dump-roots": (cmd_dump_roots, "positive roots of a root system"),
    "srk": (cmd_srk, "splitting rank and maximizing truncations"),
    "srk-k": (cmd_srk_k, "k-th splitting rank"),
    "gap": (cmd_gap, "gap between the largest and second largest truncation"),
    "profile": (cmd_profile, "all k-th splitting ranks and splitting indices"),
    "product": (cmd_product, "profile of a product of spaces"),
    "verify-table1": (cmd_verify_table1, "check splitting ranks against the reference table"),
    "verify-table2": (cmd_verify_table2, "check gaps against the reference table"),
    "verify-ksrk": (cmd_verify_ksrk, "check srk^k <= srk - 2(k-1) on the catalog"),
    "verify-brain": (cmd_verify_brain, "seeded sweep of the product inequality"),
    "hall-check": (cmd_hall_check, "cardinality bound and matching on random frames"),
    "match": (cmd_match, "demand matching for a given frame"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=os.environ.get("SPLITRANK_FORMAT") or "text")
    common.add_argument("--max-rank", type=int, default=10)
    common.add_argument("--max-k", type=int, default=6, dest="max_param_k")
    common.add_argument("--oracle-bound", type=int, default=5)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="splitrank", description="Splitting ranks of symmetric spaces.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name in ("dim", "dump-roots", "srk", "srk-k", "gap", "profile", "hall-check", "match"):
            _space_args(p)
        if name == "srk-k":
            p.add_argument("kth", type=int, metavar="K", help="number of split R-factors")
        if name == "product":
            p.add_argument("--factor", action="append", required=True, help="NAME or ROW:r[,k]; repeat")
        if name == "verify-brain":
            p.add_argument("--sweep", type=int, default=200)
            p.add_argument("--allow-excluded", action="store_true")
        if name == "hall-check":
            p.add_argument("--frames", type=int, default=100)
        if name == "match":
            p.add_argument("--frame", required=True, help='e.g. "1,0;0,1" (rationals like 1/2 allowed)')
        if name in ("hall-check", "match"):
            p.add_argument("--first-demand", choices=("srk", "rank"), default="srk")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(args.max_rank, args.max_param_k, args.oracle_bound,
                        getattr(args, "sweep", 200), args.seed, args.format)
        fn = COMMANDS[args.command][0]
        return fn(args, cfg, Out(cfg.format, stdout))
    except UnknownSpaceError as exc:
        stderr.write(f"splitrank: {exc}\n")
        return 2
    except (UsageError, RootSystemError, ValueError) as exc:
        stderr.write(f"splitrank: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
