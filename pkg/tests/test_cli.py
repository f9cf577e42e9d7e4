import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from ybsets import io
from ybsets.cli import main, parse_cycles
from ybsets.core import flip

from conftest import FIXTURES, quadratic_sets


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@settings(max_examples=50, deadline=None)
@given(quadratic_sets(max_n=4))
def test_serialization_roundtrip(qs):
    text = io.dumps(qs, {"name": "x"})
    back, meta = io.parse(text)
    assert back == qs and meta == {"name": "x"}
    assert io.dumps(back, meta) == text


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_files_are_canonical(name):
    text = io.resolve(name).read_text(encoding="utf-8").strip()
    qs, meta = io.parse(text)
    assert io.dumps(qs, meta) == text
    assert meta["provenance"]


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"format_version": 1, "n": 2}',
        '{"format_version": 2, "n": 1, "r": [[0, 0]]}',
        '{"format_version": 1, "n": 2, "r": [[0, 0], [0, 0], [1, 0], [1, 1]]}',
        '{"format_version": 1, "n": 1, "r": [[0, true]]}',
    ],
)
def test_parse_errors(text):
    with pytest.raises(io.ParseError):
        io.parse(text)


def test_check_command(capsys):
    code, out, _ = run(capsys, "check", "perm3")
    assert code == 0
    assert "braided            yes" in out and "two_cancellative   no" in out
    code, out, _ = run(capsys, "check", "q5", "--json")
    rec = json.loads(out)
    assert rec["base"] == 0 and rec["flags"]["square_free"] and rec["flags"]["sd"]
    assert rec["flags"]["braided"] and not rec["flags"]["involutive"]


def test_malformed_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"format_version": 1, "n": 2, "r": []}')
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "check", str(tmp_path / "missing.json"))
    assert code == 2


def test_budget_exits_3(tmp_path, capsys):
    path = tmp_path / "t.json"
    path.write_text(io.dumps(flip(10)))
    code, _, err = run(capsys, "dims", str(path), "--max-degree", "8")
    assert code == 3 and "budget" in err


def test_dims_and_orbits(capsys):
    code, out, _ = run(capsys, "dims", "q5", "--max-degree", "3")
    assert code == 0 and out.strip() == "1 5 9 10"
    code, out, _ = run(capsys, "orbits", "q5", "--degree", "2")
    assert "orbits = 9" in out and "nontrivial q = 4" in out


def test_groebner_order_option(capsys):
    code, out, _ = run(capsys, "groebner", "dih3", "--max-degree", "4", "--order", "2,1,0")
    assert code == 0 and "ordering 3 < 2 < 1" in out
    code, _, _ = run(capsys, "groebner", "dih3", "--order", "0,0,1")
    assert code == 2


def test_quandle_pipe_to_groebner():
    quandle = subprocess.run(
        [sys.executable, "-m", "ybsets", "quandle", "dihedral", "5"], capture_output=True, text=True, check=True
    )
    gb = subprocess.run(
        [sys.executable, "-m", "ybsets", "groebner", "--max-degree", "4"],
        input=quandle.stdout,
        capture_output=True,
        text=True,
        check=True,
    )
    lines = gb.stdout.strip().splitlines()
    assert set(lines[-4:]) == {"133-122", "144-122", "155-122", "1222-1112"}


def test_extend_command(capsys):
    code, out, err = run(
        capsys, "extend", "triv3a", "triv3b", "--sigma", "(0 1 2)", "--tau", "(0 1 2)"
    )
    assert code == 0 and "|r| = 6" in err
    qs, _ = io.parse(out)
    assert qs == io.load_fixture("ex64")


def test_parse_cycles():
    assert parse_cycles("(0 1 2)(3 4)", 5).images == (1, 2, 0, 4, 3)
    assert parse_cycles("()", 2).is_identity()
    with pytest.raises(io.ParseError):
        parse_cycles("0 1", 2)


def test_enumerate_command(capsys):
    code, out, err = run(capsys, "enumerate", "--n", "3", "--require", "sd,square_free,braided")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(recs) == 3 and "3 isomorphism classes" in err
    assert list(recs[0]) == sorted(recs[0])
    code, _, _ = run(capsys, "enumerate", "--n", "2", "--require", "bogus")
    assert code == 2


def test_stu_command(capsys):
    code, out, _ = run(capsys, "stu", "ex64", "--blocks", "0,1,2|3,4,5", "--length", "2")
    assert code == 0 and "stu1-stu4 hold" in out and "monoid level up to length 2: hold" in out
    code, _, _ = run(capsys, "stu", "ex64", "--blocks", "0,1,3|2,4,5")
    assert code == 2


def test_survey_command(capsys):
    code, out, _ = run(capsys, "survey", "--n", "3", "--sd-only")
    assert code == 0 and len(out.splitlines()) == 1
