from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from conftest import DATA, GOLDEN
from ehull.cli import main

UPDATE = os.environ.get("EHULL_UPDATE_GOLDEN") == "1"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


GOLDEN_CASES = {
    "summary_8_4_4": ("summary", "--json", DATA / "optimal_8_4_4.e"),
    "hull_right_example": ("hull", "--json", DATA / "right_hull_example.e"),
    "dual_left": ("dual", "--side", "left", "--json", DATA / "build_I_6_4.e"),
    "residue_example": ("residue", "--json", DATA / "right_hull_example.e"),
    "construct_I": ("construct", "--method", "I", "--u", "100101", "--json", DATA / "build_I_6_4.e"),
    "construct_III": ("construct", "--method", "III", "--code", DATA / "build_III_10_6.e", "--u", "1111111111", "--json"),
    "classify_6_2_2": ("classify", "--n", 6, "--k", 2, "--hull-rank", 2, "--json"),
    "census_5_2": ("census", "--n", 5, "--k", 2, "--json"),
    "equiv_self": ("equiv", "--json", DATA / "build_I_6_4.e", DATA / "build_I_6_4.e"),
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_json(capsys, name):
    code, out, _ = run(capsys, *GOLDEN_CASES[name])
    assert code == 0
    doc = json.loads(out)
    path = GOLDEN / f"{name}.json"
    if UPDATE:
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    assert doc == json.loads(path.read_text())


def test_hull_text_flags_right_hull(capsys):
    code, out, _ = run(capsys, "hull", DATA / "right_hull_example.e")
    assert code == 0
    assert "RHull: 4 codewords, not free" in out
    assert "LHull: 1 codewords, free" in out


def test_distance_of_table_code(capsys):
    assert run(capsys, "distance", DATA / "optimal_8_4_4.e")[:2] == (0, "4\n")


def test_construct_emits_both_matrices(capsys):
    code, out, _ = run(capsys, "construct", "--method", "I", "--u", "100101", DATA / "build_I_6_4.e")
    assert code == 0
    assert "E 5 8" in out and "E 3 8" in out
    summary = json.loads(out.strip().splitlines()[-1])
    assert summary["hull_rank"] == 3 and summary["parity_check_valid"]


def test_construct_precondition_message(capsys):
    code, _, err = run(capsys, "construct", "--method", "II", "--u", "100101", DATA / "build_I_6_4.e")
    assert code == 2
    assert "Construction II requires <u,u> = 0" in err


def test_equiv_verdicts(capsys, tmp_path):
    a = tmp_path / "a.e"
    b = tmp_path / "b.e"
    c = tmp_path / "c.e"
    a.write_text("E 2 4\nk 0 k 0\n0 k 0 k\n")
    b.write_text("E 2 4\nk k 0 0\n0 0 k k\n")
    c.write_text("E 2 4\nk 0 0 0\n0 k 0 0\n")
    code, out, _ = run(capsys, "equiv", a, b)
    assert code == 0 and out.startswith("equivalent (")
    code, out, _ = run(capsys, "equiv", a, c)
    assert code == 1 and out == "inequivalent\n"


def test_bad_symbol_location(capsys, tmp_path):
    p = tmp_path / "bad.e"
    p.write_text("E 2 4\nk 0 0 0\n0 k x 0\n")
    code, out, err = run(capsys, "summary", p)
    assert code == 2 and out == ""
    assert "line 3, column 5: bad symbol 'x'" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("summary", "/nonexistent/file.e"),
        ("classify", "--n", "9", "--k", "2", "--hull-rank", "1"),
        ("classify", "--n", "4", "--k", "2", "--hull-rank", "2", "--json", "--csv"),
        ("hull", "--unknown-flag", "x.e"),
        ("verify", "--oracle", "--max-n", "9"),
        ("construct", "--method", "V", "--u", "1", "x.e"),
        (),
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_classify_csv_and_figure(capsys, tmp_path):
    fig = tmp_path / "figs" / "cell.png"
    code, out, _ = run(capsys, "classify", "--n", 6, "--k", 2, "--hull-rank", 2, "--csv", "--figure", fig)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,hull_rank,d,class,generator"
    assert lines[1].startswith("6,2,2,4,1,")
    assert fig.stat().st_size > 1000


def test_census_table_and_figure(capsys, tmp_path):
    fig = tmp_path / "census.png"
    code, out, _ = run(capsys, "census", "--n", 4, "--k", 2, "--figure", fig)
    assert code == 0
    assert out.splitlines()[0] == "hull_rank\tcount\tbest_d"
    assert fig.exists()


def test_verify_oracle(capsys):
    code, out, _ = run(capsys, "verify", "--oracle", "--count", 25, "--max-n", 4, "--seed", 9)
    assert code == 0
    assert out.strip().endswith("seed 9: 0 disagreements")


def test_verify_tables_custom_fixture(capsys, tmp_path):
    good = tmp_path / "good.txt"
    good.write_text("E 1 2\nk k\nexpect n=2 k=1 d=2 l=1 table=t\n")
    assert run(capsys, "verify-tables", "--fixture", good)[0] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("E 1 2\nk k\nexpect n=2 k=1 d=1 l=1 table=t\n")
    code, out, _ = run(capsys, "verify-tables", "--fixture", bad, "--json")
    assert code == 1
    assert json.loads(out)["fails"] == 1
    broken = tmp_path / "broken.txt"
    broken.write_text("E 1 2\nk\nexpect n=2 k=1 d=1 l=1 table=t\n")
    assert run(capsys, "verify-tables", "--fixture", broken)[0] == 2


def test_console_script_entry_point():
    r = subprocess.run([sys.executable, "-m", "ehull.cli", "distance", str(DATA / "optimal_8_4_4.e")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "4\n"
