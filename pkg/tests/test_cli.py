import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from overparity.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tables_three_matches_golden(capsys):
    code, out, _ = run(capsys, "tables", "3")
    assert code == 0
    assert out == (GOLDEN / "tables_3.txt").read_text()


def test_golden_tables_carry_the_pair_values():
    text = (GOLDEN / "tables_3.txt").read_text()
    value_rows = [line for line in text.splitlines() if re.fullmatch(r"\|( \d+ +\|)+", line)]
    pairs = [tuple(int(x) for x in row.strip("|").split("|")) for row in value_rows]
    assert pairs == [
        (5, 3, 5, 3, 4, 2, 5, 1),
        (4, 1, 4, 1, 5, 3, 6, 2),
        (5, 3, 4, 2, 6, 2, 5, 1),
        (5, 3, 4, 1, 5, 3, 4, 1),
    ]


def test_tables_one_and_zero(capsys):
    _, out, _ = run(capsys, "tables", "1")
    assert "| (1)  |" in out and "| (1~) |" in out
    _, out, _ = run(capsys, "tables", "0")
    assert out.count("| () |") == 2


def test_tables_json(capsys):
    _, out, _ = run(capsys, "tables", "3", "--format", "json")
    data = json.loads(out)
    assert len(data) == 6 and len(data[0]["rows"]) == 8
    assert data[1]["rows"][0][3] == "+inf"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "OP", "--n", "3")
    assert code == 0 and out.splitlines() == ["3", "3~", "2,1", "2~,1", "2,1~", "2~,1~", "1,1,1", "1~,1,1"]
    _, out, _ = run(capsys, "enumerate", "--family", "OP", "--n", "10", "--count-only")
    assert out == "232\n"
    _, out, _ = run(capsys, "enumerate", "--n", "0")
    assert out == "()\n"
    _, out, _ = run(capsys, "enumerate", "--family", "D", "--n", "3", "--format", "json")
    assert json.loads(out) == [[{"size": 3, "overlined": False}],
                               [{"size": 2, "overlined": False}, {"size": 1, "overlined": False}]]


def test_count(capsys):
    _, out, _ = run(capsys, "count", "--family", "barNgtO", "--n", "3")
    assert out == "A=4 B=1 A-B=3\n"
    _, out, _ = run(capsys, "count", "--rhs", "p", "--n", "5")
    assert out == "7\n"
    _, out, _ = run(capsys, "count", "--family", "NgeO", "--table", "--max-n", "3")
    assert out.splitlines() == ["n,A,B,A-B", "1,1,1,0", "2,2,2,0", "3,5,3,2"]


def test_count_usage_errors(capsys):
    code, _, err = run(capsys, "count", "--n", "3")
    assert code == 2 and "exactly one" in err
    code, _, _ = run(capsys, "count", "--rhs", "p")
    assert code == 2


def test_series(capsys):
    _, out, _ = run(capsys, "series", "--expr", "OP_TOTAL", "--order", "4")
    assert out.splitlines() == ["n,coeff", "0,1", "1,2", "2,4", "3,8", "4,14"]
    _, out, _ = run(capsys, "series", "--expr", "GEN_D", "--t", "-1", "--order", "5", "--format", "json")
    assert json.loads(out)["coefficients"] == [1, -1, -1, 0, 0, 1]
    code, _, _ = run(capsys, "series", "--expr", "PHAT", "--form", "2")
    assert code == 2


def test_map(capsys):
    code, out, _ = run(capsys, "map", "--name", "phi", "--input", "8~,7,5,3~,2~")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "image: (8,7,5~,3~,2~)"
    assert "l_OgeN,1,0" in lines and "l_OleN,0,1" in lines
    _, out, _ = run(capsys, "map", "--name", "double_half", "--input", "3,3,1", "--inverse")
    assert out.startswith("image: (6,1)")
    _, out, _ = run(capsys, "map", "--name", "odd_largest_witness", "--input", "6")
    assert out == "(3,1,1,1)\n"


def test_map_errors(capsys):
    code, _, err = run(capsys, "map", "--name", "varphi", "--input", "")
    assert code == 2 and "empty" in err
    code, _, _ = run(capsys, "map", "--name", "toggle_all", "--input", "2~,1")
    assert code == 2
    code, _, _ = run(capsys, "map", "--name", "phi", "--input", "2~,2~")
    assert code == 2


def test_verify_text_and_json(capsys):
    code, out, _ = run(capsys, "verify", "--id", "T14_3", "--max-n", "8", "--order", "30")
    assert code == 0 and out.startswith("PASS    T14_3")
    code, out, _ = run(capsys, "verify", "--id", "T12b", "--max-n", "4", "--order", "10",
                       "--mode", "enum", "--format", "json")
    data = json.loads(out)
    rep = data["reports"][0]
    assert rep["identity"] == "T12b" and rep["status"] == "pass"
    assert rep["rows"][-1] == {"n": 4, "lhs": 5, "rhs": 5, "channel": "enum"}


def test_verify_usage(capsys):
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "--id", "nope")[0] == 2
    assert run(capsys, "verify", "--map", "nope")[0] == 2
    assert run(capsys, "verify", "--all", "--max-n", "30", "--order", "20")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from overparity.verify import REGISTRY, Identity
    monkeypatch.setitem(REGISTRY, "BOGUS", Identity("BOGUS", "wrong", enum=lambda n: (n, 0)))
    code, out, _ = run(capsys, "verify", "--id", "BOGUS", "--max-n", "3", "--mode", "enum")
    assert code == 1 and out.startswith("FAIL")


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--family", "XX", "--n", "3"])
    assert exc.value.code == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "overparity", "verify", "--id", "GF_2_5", "--max-n", "5",
           "--order", "20", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["passed"] == 1
