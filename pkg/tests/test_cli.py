import csv
import io
import json

import pytest

from splitrank.cli import COMMANDS, RunConfig, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def as_json(*argv):
    code, out, err = call(*argv, "--format", "json")
    assert code == 0, err
    data = json.loads(out)
    assert data.pop("schema_version") == 1
    return data


def test_srk_json_example():
    data = as_json("srk", "--space", "E7(C)/E7")
    assert data["srk"] == 79
    assert data["maximizers"] == [{"removed": 7, "components": ["E6(C)/E6"], "dim": 79}]


def test_dim_from_family():
    assert call("dim", "--family", "A", "--rank", "1", "--mult", "1") == (0, "2\n", "")
    assert call("dim", "--row", "SO_pq", "--rank", "3", "--k", "2")[1] == "15\n"
    assert call("dim", "--family", "B", "--rank", "3", "--mult", "long=1,short=8")[1] == "33\n"


def test_unknown_space_suggests():
    code, out, err = call("srk", "--space", "SL(4,Q)/SO(4)")
    assert code == 2 and out == ""
    assert "SL(4,R)/SO(4)" in err


def test_parse_errors_exit_2(capsys):
    assert call("srk")[0] == 2
    assert run(["no-such-command"]) == 2
    assert run(["srk", "--format", "yaml", "--space", "H^2"]) == 2
    assert call("srk-k", "--space", "SL(3,R)", "5")[0] == 2
    assert call("match", "--space", "SL(3,R)", "--frame", "1,x")[0] == 2


def test_every_command_runs():
    argv = {
        "catalog": ["--max-rank", "3", "--max-k", "2"],
        "dim": ["--space", "SU(2,3)"],
        "dump-roots": ["--family", "G2"],
        "srk": ["--space", "F4^4/Sp(3)xSp(1)"],
        "srk-k": ["--space", "SL(5,R)", "2"],
        "gap": ["--space", "Sp(5,R)/U(5)"],
        "profile": ["--space", "E6^2/SU(6)xSp(1)"],
        "product": ["--factor", "SL(5,R)/SO(5)", "--factor", "SO_pq:3,2"],
        "verify-table1": ["--max-rank", "4", "--max-k", "3"],
        "verify-table2": ["--max-rank", "4", "--max-k", "3"],
        "verify-ksrk": ["--max-rank", "4", "--max-k", "3"],
        "verify-brain": ["--sweep", "10"],
        "hall-check": ["--space", "SL(5,R)", "--frames", "5"],
        "match": ["--space", "SU(2,4)", "--frame", "1,0;0,1"],
    }
    assert set(argv) == set(COMMANDS)
    for name, extra in argv.items():
        for fmt in ("text", "csv", "json"):
            code, out, err = call(name, *extra, "--format", fmt)
            assert code == 0, (name, fmt, err)
            assert out
            if fmt == "json":
                assert json.loads(out)["schema_version"] == 1


def test_deterministic_output():
    for argv in (["verify-brain", "--sweep", "20", "--seed", "7"], ["hall-check", "--space", "SU(2,4)", "--frames", "10"]):
        assert call(*argv, "--format", "json") == call(*argv, "--format", "json")


def test_format_from_environment(monkeypatch):
    monkeypatch.setenv("SPLITRANK_FORMAT", "json")
    code, out, _ = call("dim", "--space", "H^4")
    assert json.loads(out)["n"] == 4
    code, out, _ = call("dim", "--space", "H^4", "--format", "text")
    assert out == "4\n"


def test_csv_header():
    _, out, _ = call("srk", "--space", "F4^4/Sp(3)xSp(1)", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["space", "r", "srk", "removed", "components", "dim"]
    assert {r[4] for r in rows[1:]} == {"SO_0(3,4)/SO(3)xSO(4)", "Sp(3,R)/U(3)"}


def test_srk_k_and_profile():
    assert as_json("srk-k", "--space", "SL(5,R)", "2")["srk"] == 7
    data = as_json("profile", "--space", "SL(5,R)")
    assert data["values"] == [14, 10, 7, 5, 4] and data["si"] == [0, 4, 7, 9, 10]


def test_gap_command():
    data = as_json("gap", "--space", "Sp(5,R)/U(5)")
    assert data["gap"] == 6
    assert sorted(tuple(m["components"]) for m in data["maximizers"]) == \
        [("H^2", "Sp(3,R)/U(3)"), ("SL(5,R)/SO(5)",)]
    assert as_json("gap", "--space", "G2^2/SO(4)")["gap"] is None
    assert call("gap", "--space", "H^3")[0] == 2


def test_product_command():
    data = as_json("product", "--factor", "SL(5,R)", "--factor", "SL(5,R)")
    assert data["si"][2] == 7 and data["inequality_holds"] is True
    data = as_json("product", "--factor", "H^2", "--factor", "E8^8/SO(16)")
    assert data["excluded_factor"] == "H^2" and "inequality_holds" not in data


def test_verify_exit_codes():
    code, out, _ = call("verify-table2", "--max-rank", "10")
    assert code == 0 and out.strip().endswith("221 rows, 0 failed")
    code, out, _ = call("verify-brain", "--sweep", "200", "--seed", "1", "--allow-excluded")
    assert code == 0 and "excluded products violate" in out


def test_hall_commands():
    code, out, _ = call("hall-check", "--space", "Sp(2,R)/U(2)", "--frames", "3")
    assert code == 1 and "VIOLATED at 1,2" in out
    data = as_json("match", "--space", "Sp(2,R)/U(2)", "--frame", "1,0;0,1")
    assert data == {"space": "SO_0(2,3)/SO(2)xSO(3)", "r": 2, "feasible": False, "deficient": [1, 2]}
    data = as_json("match", "--space", "SU(2,4)", "--frame", "1/2,0;0,1")
    assert data["feasible"] and [a["demand"] for a in data["assignment"]] == [9, 2]
    slots = [(tuple(s[0]), s[1]) for a in data["assignment"] for s in a["slots"]]
    assert len(slots) == len(set(slots)) == 11
    data = as_json("match", "--space", "SU(2,4)", "--frame", "1,0;0,1", "--first-demand", "rank")
    assert [a["demand"] for a in data["assignment"]] == [2, 2]


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(max_rank=0)
    with pytest.raises(ValueError):
        RunConfig(format="xml")
