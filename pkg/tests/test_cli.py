from __future__ import annotations

import json
import subprocess
import sys
from importlib.resources import files

import pytest

from braidknot.algebra import LaurentPoly, Permutation
from braidknot.cli import main
from braidknot.link import parse_pd

HOPF = str(files("braidknot.data").joinpath("hopf.pd"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["perm", "compose", "(2,3,1,5,4)", "(3,5,2,1,4)"], "(5,2,3,4,1)"),
        (["perm", "order", "(2,1,4,3)"], "2"),
        (["perm", "inverse", "(3,1,2)"], "(2,3,1)"),
        (["perm", "cycles", "(3,1,2,5,6,4)"], "(1 3 2)(4 5 6)"),
        (["perm", "cycles", "(1,2)"], "()"),
        (["perm", "factor", "(2,3,1,5,4)"], "t2 t1 t4"),
        (["braid", "pure", "-n", "4", "1 2 -3 -3 2 1"], "true"),
        (["braid", "perm", "-n", "6", "-1 -1 -1 -3 -3 -5 -5 -5 2 4"], "(3,1,2,5,6,4)"),
        (["braid", "classify", "-n", "4", "-2 -2 1 -3"], "homogeneous (+1,-1,-1)"),
        (["braid", "crossings", "-n", "3", "1 -2"], "certified 2 (alternating: Turaev 1988)"),
        (["braid", "simplify", "-n", "4", "-2 -2 1 -3"], "-1 -1 (n=2)"),
        (["braid", "reduce", "-n", "3", "1 2 -2 -1"], "(empty)"),
    ],
)
def test_outputs(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert (code, out, err) == (0, expected, "")


def test_errors_go_to_stderr(capsys):
    code, out, err = run(capsys, "perm", "compose", "(1,2)", "(1,2,3)")
    assert code != 0 and out == "" and "degree" in err
    code, out, err = run(capsys, "braid", "pure", "-n", "3", "1 7")
    assert code != 0 and "'7'" in err
    code, out, err = run(capsys, "invariants", "--pd", "/nonexistent.pd")
    assert code != 0 and "cannot read" in err


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["perm", "order", "(1)", "--bogus"])
    assert exc.value.code != 0


def test_invariants_of_braid(capsys):
    code, out, _ = run(capsys, "invariants", "-n", "6", "-1 -1 -1 -3 -3 -5 -5 -5 2 4")
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.splitlines())
    assert lines["components"] == "2"
    # letter +i is a positive crossing, so this closure is the mirror of the tabulated one
    conway = LaurentPoly.parse(lines["conway"], "z")
    assert conway.negate_variable() == LaurentPoly.parse("z^5 + 2z^3 + z")
    code, out, _ = run(capsys, "invariants", "-n", "1", "")
    assert out.splitlines()[:3] == ["components: 1", "conway: 1", "jones: 1"]


def test_invariants_of_pd_file(capsys):
    code, out, _ = run(capsys, "invariants", "--pd", HOPF)
    assert code == 0 and "jones: -q^5 - q" in out.splitlines()
    code, out, _ = run(capsys, "invariants", "--pd", HOPF, "--json")
    data = json.loads(out)
    assert data["jones"] == {"variable": "q", "terms": [[5, -1], [1, -1]]}
    assert data["writhe"] == 2


def test_crossing_cap_flag(capsys):
    code, _, err = run(capsys, "invariants", "-n", "2", "1 1 1 1 1", "--max-crossings", "4")
    assert code != 0 and "cap" in err


def test_blanket_word_rejected(capsys):
    from braidknot.blanket import blanket_braid

    code, _, err = run(capsys, "invariants", "-n", "36", str(blanket_braid()))
    assert code != 0 and "blanket" in err


def test_blanket_outputs(capsys):
    code, out, _ = run(capsys, "blanket")
    assert code == 0 and "36" in out and "1008" in out and "homogeneous" in out
    code, out, _ = run(capsys, "blanket", "--json")
    assert json.loads(out)["is_pure"] is True


def test_closure_prints_valid_pd(capsys):
    code, out, _ = run(capsys, "closure", "-n", "2", "1 1")
    assert code == 0
    assert parse_pd(out).crossings == parse_pd(open(HOPF).read()).crossings


def test_round_trip_of_printed_values(capsys):
    _, out, _ = run(capsys, "perm", "compose", "(2,3,1)", "(3,1,2)")
    assert str(Permutation.parse(out)) == out
    _, out, _ = run(capsys, "invariants", "--pd", HOPF)
    jones = out.splitlines()[2].split(": ", 1)[1]
    assert str(LaurentPoly.parse(jones)) == jones


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "braidknot", "perm", "order", "(2,3,1)"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "3"
