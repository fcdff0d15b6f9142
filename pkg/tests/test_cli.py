import io
import json
import subprocess
import sys
from fractions import Fraction
from importlib import resources

import pytest

from mixedindex import catalog
from mixedindex.cli import main
from mixedindex.formats import load, parse_enabling, parse_game
from mixedindex.generators import horner_disaggregate, planar_realization
from mixedindex.localpoly import Poly, PolySystem
from mixedindex.report import parse_report

DATA = resources.files("mixedindex") / "data"


def data(name):
    return str(DATA / name)


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_bundled_files_match_catalog():
    doc = parse_game((DATA / "three_player.json").read_text())
    assert doc.game == catalog.three_player_game()
    assert doc.equilibrium == catalog.three_player_equilibrium()
    doc = parse_game((DATA / "outside_option.json").read_text())
    assert doc.game == catalog.outside_option_game()
    ef = parse_enabling((DATA / "enabling.json").read_text()).form
    assert ef.payoffs == catalog.enabling_payoffs()
    assert ef.simplices == catalog.enabling_form().simplices


def test_index_three_player(capsys):
    code, out, _ = run(capsys, ["index", "--input", data("three_player.json")])
    rep = parse_report(out)
    assert code == 0
    assert rep["index"] == "0" and rep["standardMonomials"] == "{1, z}"
    assert rep["robustnessVerdict"] == "notPayoffRobust"


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, ["verify", "--input", data("three_player.json")])
    assert (code, out) == (0, "status: interiorEquilibrium\n")
    doc = json.loads((DATA / "three_player.json").read_text())
    doc["equilibrium"][0] = ["1/3", "2/3"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, ["verify", "--input", str(bad)])
    assert (code, out) == (1, "status: notEquilibrium\n")
    code, out, _ = run(capsys, ["verify", "--input", data("outside_option.json")])
    assert (code, out) == (2, "status: notCompletelyMixed\n")


def test_generate_then_index_from_stdin(capsys, monkeypatch):
    code, text, _ = run(capsys, ["generate", "planar", "--kind", "conjugatePower", "--m", "2"])
    assert code == 0
    code, out, _ = run(capsys, ["index", "--input", "-"], stdin=text, monkeypatch=monkeypatch)
    assert parse_report(out)["index"] == "-2"


def test_generate_round_trip(capsys, tmp_path):
    target = tmp_path / "h.sys"
    code, _, _ = run(capsys, ["generate", "horner", "--coeffs", "0,0,0,1,1", "--root", "0",
                              "--move-to", "1/3", "--scales", "1,2,3", "--output", str(target)])
    assert code == 0
    q = Poly(1, {(3,): 1, (4,): 1}).shift([-Fraction(1, 3)])
    expected = horner_disaggregate(q, Fraction(1, 3), [1, 2, 3])
    assert PolySystem.from_text(target.read_text()) == expected.system
    code, text, _ = run(capsys, ["generate", "planar", "--kind", "power", "--m", "3"])
    assert PolySystem.from_text(text) == planar_realization("power", 3)


def test_reduce_outside_option(capsys, tmp_path):
    emitted = tmp_path / "reduced.json"
    code, out, _ = run(capsys, ["reduce", "--input", data("outside_option.json"),
                                "--emit-game", str(emitted)])
    assert code == 0
    assert out.splitlines()[0] == "removed: Out; -; -"
    assert parse_report(out)["index"] == "0"
    assert parse_game(emitted.read_text()).game == catalog.three_player_game()


def test_enabling_command(capsys):
    code, out, _ = run(capsys, ["enabling", "--input", data("enabling.json"), "--with-oracle"])
    rep = parse_report(out)
    assert code == 0
    assert rep["vertexProfile"] == "1/2, 1/2; 1/4, 1/4, 1/2; 1/4, 1/4, 1/2"
    assert (rep["dimension"], rep["iMaxDimension"], rep["absIndex"]) == ("1", "0", "1")
    assert rep["oracleEstimate"] == rep["index"]


def test_classify_and_oracle(capsys):
    code, out, _ = run(capsys, ["classify", "--input", data("three_player.json"),
                                "--order-perm", "z,x,y"])
    rep = parse_report(out)
    assert code == 0 and rep["parityShortcut"] == "zero" and rep["rankDeficiency"] == "1"
    code, out, _ = run(capsys, ["oracle", "--input", data("matching_pennies.json")])
    rep = parse_report(out)
    assert (rep["estimate"], rep["confidence"]) == ("1", "unanimous")


def test_indeterminate_exit_code(capsys, monkeypatch):
    text = "vars: x, y\nx^3 + x*y^2\nx^2*y + y^3\n"
    code, out, _ = run(capsys, ["index", "--input", "-"], stdin=text, monkeypatch=monkeypatch)
    assert code == 2
    assert parse_report(out)["index"] == "undefined: infinite-dimensional"


def test_errors_name_the_location(capsys, tmp_path, monkeypatch):
    doc = json.loads((DATA / "three_player.json").read_text())
    doc["payoffs"][0][1][0][2] = "3/0"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, err = run(capsys, ["index", "--input", str(bad)])
    assert code == 1 and out == ""
    assert err.startswith("InputError:") and "(at payoffs[0][1][0][2])" in err
    code, _, err = run(capsys, ["index", "--input", "-"], stdin="vars: x\nx +\n",
                       monkeypatch=monkeypatch)
    assert code == 1 and "(at line 2)" in err
    code, _, err = run(capsys, ["index", "--input", str(tmp_path / "missing.json")])
    assert code == 1 and err.startswith("InputError")
    code, _, err = run(capsys, ["index", "--input", data("outside_option.json")])
    assert code == 1 and err.startswith("NotInteriorEquilibrium")


def test_batch_matches_single_runs(capsys, tmp_path):
    for name in ("three_player.json", "matching_pennies.json", "conjugate_square.sys"):
        (tmp_path / name).write_text((DATA / name).read_text())
    out_dir = tmp_path / "out"
    code = main(["index", "--input-dir", str(tmp_path), "--output-dir", str(out_dir),
                 "--jobs", "2", "--with-oracle"])
    capsys.readouterr()
    assert code == 0
    for name in ("three_player.json", "matching_pennies.json", "conjugate_square.sys"):
        single_code, single, _ = run(capsys, ["index", "--input", str(tmp_path / name),
                                              "--with-oracle"])
        assert (out_dir / f"{name}.report").read_text() == single
    assert not [p for p in out_dir.iterdir() if p.name.endswith(".tmp")]


def test_reports_are_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "mixedindex", "index", "--input", data("enabling.json"),
           "--with-oracle"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and b"index: -1" in first


def test_load_detects_modes():
    assert load((DATA / "conjugate_square.sys").read_text())[0] == "system"
    assert load((DATA / "enabling.json").read_text())[0] == "enabling"
    assert load((DATA / "matching_pennies.json").read_text())[0] == "game"
    with pytest.raises(Exception):
        load('{"mode": "tree"}')
