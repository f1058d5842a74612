import io
import json

import pytest

from bigradedsyz.cli import main, parse_box, run_verify
from bigradedsyz.errors import ParseError
from bigradedsyz.instances import (
    degenerate_fixture, monomial_nongeneric, format_instance, generic_fixture, parse_instance,
)


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, p in (("mono", monomial_nongeneric()), ("gen", generic_fixture()), ("deg", degenerate_fixture())):
        f = tmp_path / f"{name}.txt"
        f.write_text(format_instance(p))
        paths[name] = str(f)
    return paths


def test_classify(files):
    code, out = run(["classify", files["mono"]])
    assert code == 0 and "class: NonGeneric" in out and "resultant: 1" in out
    code, out = run(["classify", files["deg"]])
    assert code == 3 and "Degenerate" in out
    code, out = run(["classify", files["gen"]])
    assert code == 0 and "class: Generic" in out


def test_syzygies(files):
    code, out = run(["syzygies", files["mono"]])
    assert code == 0
    assert "(w^2, z^2, -zw)" in out
    assert "C1: (-xw^2, -xz^2, xzw)" in out
    code, out = run(["syzygies", files["gen"], "--json"])
    data = json.loads(out)
    assert sorted(data["data"]["degrees"]) == sorted(["(6,1)", "(4,2)", "(4,2)", "(4,2)", "(3,3)", "(3,3)"])
    assert run(["syzygies", files["deg"]])[0] == 3


def test_hilbert_csv(files):
    code, out = run(["hilbert", files["gen"], "--csv"])
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "m,n,h_syz_pred,h_syz,h_I_pred,h_I,e2_pred,e2"
    assert len(lines) == 1 + 10 * 7
    row = next(l for l in lines[1:] if l.startswith("5,2,"))
    assert row.split(",")[2:4] == ["6", "6"]
    code, out = run(["hilbert", files["mono"], "--box", "4x3"])
    assert code == 0 and "mismatch" not in out


def test_picture(files):
    code, out = run(["picture", files["gen"]])
    assert code == 0
    grid = {}
    for line in out.splitlines():
        if line.startswith("n="):
            n = int(line[2:4])
            cells = line.split("| ")[1].split(" ")
            for m, c in enumerate(cells):
                grid[(m, n)] = c
    assert grid[(6, 1)] == grid[(3, 3)] == grid[(4, 3)] == "#"
    assert all(grid[(2, n)] == "." for n in range(7))
    assert all(grid[(m, n)] == "*" for m in range(5, 10) for n in range(2, 7))
    _, out_mono = run(["picture", files["mono"]])
    assert "#" in [l for l in out_mono.splitlines() if l.startswith("n=3")][0].split("| ")[1].split(" ")[2]


def test_resolution(files):
    code, out = run(["resolution", files["mono"], "--verify"])
    assert code == 0
    assert "F1: (2,3) (4,2) (4,2) (4,2) (6,1)" in out
    assert "total Betti ranks of R/I: 1 3 5 4 1" in out
    assert "FAIL" not in out
    code, out = run(["resolution", files["gen"]])
    assert "total Betti ranks of R/I: 1 3 6 5 1" in out


def test_verify(files):
    code, out = run(["verify", files["mono"]])
    assert code == 0 and "verdict: pass" in out
    code, out = run(["verify", files["gen"], "--json"])
    assert code == 0 and json.loads(out)["verdict"] == "pass"
    assert run(["verify", files["deg"]])[0] == 3


def test_verify_exit_code_tracks_verdict(files):
    rep = run_verify(monomial_nongeneric(), (5, 4))
    assert rep.verdict == "pass"


def test_gen_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["gen", "--class", "nongeneric", "--seed", "1", "-o", str(a)]) == 0
    assert main(["gen", "--class", "nongeneric", "--seed", "1", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    code, out = run(["classify", str(a)])
    assert "NonGeneric" in out
    code, out = run(["gen", "--seed", "1"])
    f = tmp_path / "g.txt"
    f.write_text(out)
    assert "class: Generic" in run(["classify", str(f)])[1]


def test_gen_bad_bound():
    assert run(["gen", "--bound", "0"])[0] == 2


def test_parse_errors(tmp_path):
    cases = ["[1,2,3]\n", "[1,0,0,0,0,2/4]\n" * 3, "[1,0,0,0,0,x]\n" * 3, "[1,0,0,0,0,1/0]\n" * 3, ""]
    for k, text in enumerate(cases):
        f = tmp_path / f"bad{k}.txt"
        f.write_text(text)
        assert run(["classify", str(f)])[0] == 2
    assert run(["classify", str(tmp_path / "missing.txt")])[0] == 2
    assert run(["hilbert", str(tmp_path / "bad0.txt"), "--box", "ax3"])[0] == 2


def test_instance_roundtrip_with_fractions():
    text = "# comment\n[1/2, 0, 0, 0, 0, -3/7]\n\n0 1 0 0 0 0\n[0,0,1,1,0,0]\n"
    p = parse_instance(text)
    assert parse_instance(format_instance(p)) == p
    with pytest.raises(ParseError):
        parse_instance("[1,2,3,4,5,6]\n[1,2,3,4,5,6")


def test_parse_box():
    assert parse_box("9x6") == (9, 6)
    with pytest.raises(Exception):
        parse_box("9by6")
