"""Spec grammar, command output and exit codes."""

import json
import subprocess
import sys

import pytest

from incgraph.catalog import catalog
from incgraph.cli import main, parse_spec
from incgraph.errors import DivisibilityConditionFails, NonPrimeParameter, ParseError
from incgraph.group_core import GroupSpec, render

Z = GroupSpec.cyclic


@pytest.mark.parametrize("spec", catalog(200), ids=render)
def test_render_parse_round_trip(spec):
    assert parse_spec(render(spec)) == spec


@pytest.mark.parametrize(
    "text,spec",
    [
        ("Z4xZ2", GroupSpec.product(Z(4), Z(2))),
        ("SD(7,3,1,1)", GroupSpec("SemidirectQP", (7, 3, 1, 1))),
        (" Z4 x Z2 ", GroupSpec.product(Z(4), Z(2))),
        ("D8", GroupSpec.dihedral(8)),
        ("M5^3", GroupSpec("ModularP3", (5,))),
        ("Q8xZ3", GroupSpec.product(GroupSpec("Quaternion8"), Z(3))),
    ],
)
def test_parse_examples(text, spec):
    assert parse_spec(text) == spec


@pytest.mark.parametrize(
    "text,position",
    [("Z4x", 3), ("Q9", 0), ("SD(7,3,1)", 8), ("M4", 0), ("Z4 x Z2 y", 8), ("Z", 1), ("", 0)],
)
def test_parse_error_positions(text, position):
    with pytest.raises(ParseError) as exc:
        parse_spec(text)
    assert exc.value.position == position
    assert f"at position {position}" in str(exc.value)


def test_semantic_errors_name_the_condition():
    with pytest.raises(DivisibilityConditionFails, match=r"3\^2 does not divide q-1 = 6"):
        parse_spec("SD(7,3,1,2)")
    with pytest.raises(NonPrimeParameter, match="p=9"):
        parse_spec("M9^3")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_q8(capsys):
    code, out, _ = run(capsys, "analyze", "Q8")
    assert code == 0
    assert "Star(3)" in out and "0 mismatched" in out


def test_analyze_z30_json(capsys):
    code, out, _ = run(capsys, "analyze", "Z30", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["report"]["shape"] == "Cycle(6)"
    assert doc["report"]["girth"] == 6 and doc["report"]["diameter"] == 3
    assert doc["mismatches"] == []


def test_analyze_prime_order(capsys):
    code, out, _ = run(capsys, "analyze", "Z2")
    assert code == 0 and "0 vertices, 0 edges" in out


def test_analyze_mismatch_exit_code(capsys):
    code, out, _ = run(capsys, "analyze", "Z4")
    assert code == 3 and "MISMATCH diameter" in out


def test_export(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "Z8", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["n"] == 2 and doc["edges"] == [[0, 1]]
    code, out, _ = run(capsys, "export", "Q8")
    assert out.count("--") == 3 and out.count("label=") == 4
    path = tmp_path / "z33.dot"
    code, out, _ = run(capsys, "export", "Z3xZ3", "--format", "dot", "-o", str(path))
    text = path.read_text()
    assert out == "" and text.count("label=") == 4 and "--" not in text
    assert run(capsys, "export", "Q8")[1] == run(capsys, "export", "Q8")[1]


def test_isocheck(capsys):
    code, out, _ = run(capsys, "isocheck", "Z3xZ3", "S3")
    assert code == 0 and "are isomorphic" in out and out.count("->") == 4
    code, out, _ = run(capsys, "isocheck", "Q8", "M8")
    assert code == 0 and "not isomorphic" in out


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog", "--max-order", "8")
    rows = [line.split("\t") for line in out.splitlines()]
    assert code == 0
    assert rows[0] == ["2", "Z2"] and ["8", "Q8"] in rows and len(rows) == len(catalog(8))


def test_sweep_exit_codes(capsys, tmp_path):
    path = tmp_path / "sweep.jsonl"
    code, out, _ = run(capsys, "sweep", "--max-order", "24", "--theorem", "2.13", "-o", str(path))
    # Z4 and Z9 have diameter 0, which the instance records flag
    assert code == 3
    assert "2.13   PASS" in out
    first = path.read_text()
    run(capsys, "sweep", "--max-order", "24", "--theorem", "2.13", "-o", str(path))
    assert path.read_text() == first
    code, out, _ = run(capsys, "sweep", "--max-order", "3", "--theorem", "omega_equals_chi")
    assert code == 0


@pytest.mark.parametrize(
    "argv,code",
    [
        (["analyze", "Z4x"], 2),
        (["analyze", "SD(7,3,1,2)"], 2),
        (["analyze", "Z500"], 4),
        (["sweep", "--max-order", "10", "--theorem", "9.99"], 2),
    ],
)
def test_error_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code and err.startswith("error:")


def test_order_cap_from_environment():
    env = {"INCL_ORDER_CAP": "600", "PATH": ""}
    cmd = [sys.executable, "-m", "incgraph", "analyze", "Z500", "--json"]
    proc = subprocess.run(cmd, capture_output=True, text=True, env=env)
    assert proc.returncode in (0, 3), proc.stderr
    assert json.loads(proc.stdout)["order"] == 500
