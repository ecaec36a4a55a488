import io
import json
import subprocess
import sys

import pytest

from transversal.cli import BUDGET, NEGATIVE, OK, USAGE, run
from transversal.extremal import construct_star_family
from transversal.model import dump_collection


def call(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin.encode())))
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_bound_star(capsys):
    code, out = call(capsys, "bound", "star", "--n", "11", "--delta", "4")
    assert code == OK
    assert out == {"bound": 13, "params": {"a": 1, "b": 4, "k1": 1, "k2": 5}}


def test_bound_star_compact_bytes(capsys):
    run(["bound", "star", "--n", "10", "--delta", "4"])
    assert capsys.readouterr().out == '{"bound":12,"params":{"a":1,"b":3,"k1":1,"k2":2}}\n'


def test_bound_tree(capsys):
    assert call(capsys, "bound", "tree", "--n", "4", "--m", "8") == (OK, {"bound": 4})


@pytest.mark.parametrize("argv", [["bound", "tree", "--n", "3", "--m", "7"], ["bound", "star", "--n", "2", "--delta", "2"], ["frobnicate"], []])
def test_usage_errors(capsys, argv):
    assert run(argv) == USAGE


def test_construct_then_check(tmp_path, capsys):
    code, fam = call(capsys, "construct", "star", "--n", "11", "--delta", "4")
    assert code == OK and len(fam["graphs"]) == 13
    path = tmp_path / "fam.json"
    path.write_text(json.dumps(fam))
    assert call(capsys, "check", "rainbow-star", "--delta", "4", str(path)) == (OK, {"free": True, "witness": None})
    code, out = call(capsys, "certify", "a", "--n", "11", "--delta", "4", str(path))
    assert code == OK and out["verdict"] == "member" and out["matched_case"] == "ii"
    code, out = call(capsys, "saturate", "--delta", "4", str(path))
    assert code == OK and out["saturated"] and out["candidates"] == 2310


def test_check_finds_witness(tmp_path, capsys):
    path = tmp_path / "two.json"
    path.write_text('{"vertices":3,"graphs":[{"edges":[[0,1],[0,2]]},{"edges":[[0,1],[0,2]]}]}')
    code, out = call(capsys, "check", "rainbow-star", "--delta", "2", str(path))
    assert code == NEGATIVE and out["free"] is False
    assert out["witness"]["kind"] == "star" and len(out["witness"]["edges"]) == 2


def test_stdin_pipeline(capsys, monkeypatch):
    code, fam = call(capsys, "construct", "tree", "--n", "4", "--m", "8")
    text = json.dumps(fam)
    code, out = call(capsys, "check", "rainbow-tree", "--order", "4", "-", stdin=text, monkeypatch=monkeypatch)
    assert code == OK and out["free"]
    code, out = call(capsys, "certify", "b", "--n", "4", "--m", "8", "-", stdin=text, monkeypatch=monkeypatch)
    assert code == OK and out["matched_case"] == "B"
    code, out = call(capsys, "decompose", "-", stdin=text, monkeypatch=monkeypatch)
    assert code == OK and out["s"] == 4 and out["t"] == 4
    assert all(c["pass"] for c in out["checks"])


def test_budget_exit_code(tmp_path, capsys):
    path = tmp_path / "dense.json"
    edges = [[u, v] for u in range(7) for v in range(u + 1, 7)]
    graphs = [
        [(0, 1), (1, 4), (3, 4), (3, 6)],
        [(0, 5), (1, 2), (2, 4), (4, 6), (5, 6)],
        [(1, 2), (2, 3), (3, 5), (5, 6)],
        [(0, 2), (0, 4), (1, 5), (4, 5)],
        [(0, 1), (0, 2), (0, 4), (0, 6), (1, 4), (2, 3), (3, 5), (4, 5), (4, 6)],
        [(0, 4), (2, 6)],
    ]
    assert edges
    path.write_text(json.dumps({"vertices": 7, "graphs": [{"edges": g} for g in graphs]}))
    code, out = call(capsys, "check", "rainbow-tree", "--order", "7", "--budget", "5", str(path))
    assert code == BUDGET and out["error"] == "budget exceeded"


def test_bad_input_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"vertices":3,"graphs":[{"edges":[[0,0]]}]}')
    assert run(["check", "rainbow-star", "--delta", "2", str(path)]) == USAGE
    assert run(["check", "rainbow-star", "--delta", "2", str(tmp_path / "missing.json")]) == USAGE


def test_oracle_commands(capsys):
    code, out = call(capsys, "oracle", "star", "--n", "4", "--delta", "3")
    assert code == OK and out["agrees"] and out["max"] == 2
    code, out = call(capsys, "oracle", "tree", "--n", "3", "--m", "3")
    assert code == OK
    code, out = call(capsys, "oracle", "star", "--n", "5", "--delta", "3", "--budget", "3")
    assert code == BUDGET


def test_pretty_flag_positions(capsys):
    run(["bound", "star", "--n", "11", "--delta", "4"])
    compact = capsys.readouterr().out
    run(["--pretty", "bound", "star", "--n", "11", "--delta", "4"])
    before = capsys.readouterr().out
    run(["bound", "star", "--n", "11", "--delta", "4", "--pretty"])
    after = capsys.readouterr().out
    assert before == after != compact
    assert json.loads(before) == json.loads(compact)


def test_construct_is_deterministic(capsys):
    run(["construct", "tree", "--n", "4", "--m", "8", "--kind", "pruefer", "--seed", "3"])
    first = capsys.readouterr().out
    run(["construct", "tree", "--n", "4", "--m", "8", "--kind", "pruefer", "--seed", "3"])
    assert capsys.readouterr().out == first
    assert run(["construct", "tree", "--n", "4", "--m", "8", "--kind", "pruefer"]) == USAGE


def test_construct_output_is_wire_format(capsys):
    run(["construct", "star", "--n", "8", "--delta", "3"])
    assert capsys.readouterr().out == dump_collection(construct_star_family(8, 3)) + "\n"


def test_version_and_selftest(capsys):
    code, out = call(capsys, "version")
    assert code == OK and out["version"]
    code, out = call(capsys, "selftest")
    assert code == OK and out["selftest"] == "pass"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "transversal", "bound", "star", "--n", "8", "--delta", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["bound"] == 6
