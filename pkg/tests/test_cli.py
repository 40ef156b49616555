from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from nichols.cli import EXIT_CAP, EXIT_OK, EXIT_PARSE, main, parse_input
from nichols.errors import InputError

INPUTS = Path(__file__).resolve().parent.parent / "inputs"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_dim_and_roots():
    assert run("dim", str(INPUTS / "ex1.json")) == (EXIT_OK, "432\n")
    code, text = run("roots", str(INPUTS / "ex1.json"), "--format", "json")
    roots = json.loads(text)["roots"]
    assert {r["lyndon"] for r in roots} >= {"x1x2x3x2", "x1x2x3"}


def test_present_is_deterministic():
    a = run("present", str(INPUTS / "ex2.json"), "--format", "json")
    b = run("present", str(INPUTS / "ex2.json"), "--format", "json")
    assert a == b and a[0] == EXIT_OK
    doc = json.loads(a[1])
    assert doc["generators"] == 3


def test_present_text_ex1():
    code, text = run("present", str(INPUTS / "ex1.json"))
    assert "[x_{a1+a2}, x_{a1+a2+a3}]_c = 0" in text
    assert "[x_{a1+a2+a3}, x_{a2+a3}]_c = 0" in text
    assert "x_{a1+2a2+a3}^3 = 0" in text


def test_hilbert_and_pbw_json():
    code, text = run("hilbert", str(INPUTS / "a2.json"), "--degree-bound", "3", "--format", "json")
    rows = json.loads(text)["hilbert"]
    assert {tuple(r["multidegree"]): r["coefficient"] for r in rows}[(1, 1)] == 2
    code, text = run("pbw", str(INPUTS / "a2.json"), "--format", "json")
    assert len(json.loads(text)["generators"]) == 3


def test_verify_rank_one():
    code, text = run("verify", str(INPUTS / "rank1_i.json"), "--degree-bound", "6")
    assert code == EXIT_OK and text.strip().endswith("PASS")


def test_parse_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"root_of_unity_order": 3,\n "q_exponents": [[1, 2], [0]]}')
    assert run("dim", str(bad))[0] == EXIT_PARSE
    bad.write_text('{"root_of_unity_order": 3,\n')
    assert run("dim", str(bad))[0] == EXIT_PARSE
    assert run("dim", str(tmp_path / "missing.json"))[0] == EXIT_PARSE
    with pytest.raises(InputError, match="line 2"):
        parse_input('{"root_of_unity_order": 3,\n oops}')
    with pytest.raises(InputError, match="q_exponents\\[1\\]"):
        parse_input('{"root_of_unity_order": 3, "q_exponents": [[1, 2], [0]]}')


def test_cap_exceeded(tmp_path):
    f = tmp_path / "ex.json"
    f.write_text((INPUTS / "ex1.json").read_text())
    assert run("dim", str(f), "--cap-objects", "2")[0] == EXIT_CAP
    unbounded = tmp_path / "u.json"
    unbounded.write_text('{"root_of_unity_order": 5, "q_exponents": [[0, 1], [0, 0]]}')
    assert run("dim", str(unbounded))[0] == EXIT_CAP


def test_diagram_desugaring():
    spec = parse_input((INPUTS / "ex2.json").read_text())
    assert spec.q_exponents == [[3, 2, 2], [0, 3, 2], [0, 0, 3]]


def test_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO((INPUTS / "a2.json").read_text()))
    assert run("dim", "-") == (EXIT_OK, "27\n")
