import json
import subprocess
import sys

import pytest

from narrowres.cli import main

XNX_CNF = "p cnf 1 2\n1 0\n-1 0\n"
XNX_RES = "1 i 1 0\n2 i -1 0\n3 r 1 2 1 0\n"


@pytest.fixture
def xnx_files(tmp_path):
    (tmp_path / "f.cnf").write_text(XNX_CNF)
    (tmp_path / "p.res").write_text(XNX_RES)
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_valid(xnx_files, capsys):
    code, out, _ = run(capsys, "check", "--cnf", xnx_files / "f.cnf", "--proof", xnx_files / "p.res", "--kind", "res")
    assert code == 0 and out.startswith("valid, width=1, lines=3")


def test_check_json(xnx_files, capsys):
    code, out, _ = run(capsys, "check", "--cnf", xnx_files / "f.cnf", "--proof", xnx_files / "p.res",
                       "--kind", "res", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["valid"] and doc["stats"]["lines"] == 3 and doc["violations"] == []


def test_check_corrupted_pivot(xnx_files, capsys):
    (xnx_files / "bad.res").write_text(XNX_RES.replace("3 r 1 2 1 0", "3 r 1 2 2 0"))
    code, out, _ = run(capsys, "check", "--cnf", xnx_files / "f.cnf", "--proof", xnx_files / "bad.res", "--kind", "res")
    assert code == 1 and "PivotAbsent" in out


def test_check_width_limit(xnx_files, capsys):
    code, _, _ = run(capsys, "check", "--cnf", xnx_files / "f.cnf", "--proof", xnx_files / "p.res",
                     "--kind", "res", "--max-width", "0")
    assert code == 1


def test_missing_file(xnx_files, capsys):
    code, _, err = run(capsys, "check", "--cnf", xnx_files / "nope.cnf", "--proof", xnx_files / "p.res", "--kind", "res")
    assert code == 2 and "cannot read" in err


def test_parse_error_reports_line(xnx_files, capsys):
    (xnx_files / "bad.cnf").write_text("p cnf 1 2\n1 0\nx 0\n")
    code, _, err = run(capsys, "check", "--cnf", xnx_files / "bad.cnf", "--proof", xnx_files / "p.res", "--kind", "res")
    assert code == 2 and "3" in err


def test_usage_error(capsys):
    assert run(capsys, "check")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "gen", "randk", "--vars", 2, "--clauses", 3, "--width", 5, "--seed", 1)[0] == 2


def test_expand_then_narrow(xnx_files, capsys):
    d = xnx_files
    code, out, _ = run(capsys, "expand", "--cnf", d / "f.cnf", "--proof", d / "p.res", "-o", d / "t.dnft")
    assert code == 0 and "term-width=1 lines=5 (bound 4S+2m+1=17)" in out
    assert (d / "t.dnft").read_text() == "p dnft 1\n1 A 1 0\n2 L 2\n3 C 1 2 1 0\n4 L 1\n5 C 3 4 -1 0\n"
    code, out, _ = run(capsys, "narrow", "--cnf", d / "f.cnf", "--proof", d / "t.dnft", "-o", d / "n.res")
    assert code == 0 and "bound l*ceil(log2 L)+max(k,l)=3" in out
    code, _, _ = run(capsys, "check", "--cnf", d / "f.cnf", "--proof", d / "n.res", "--kind", "res", "--max-width", 3)
    assert code == 0
    code, _, _ = run(capsys, "check", "--cnf", d / "f.cnf", "--proof", d / "t.dnft", "--kind", "dnft")
    assert code == 0


def test_expand_eliminates_weakening(xnx_files, capsys):
    d = xnx_files
    (d / "w.res").write_text("1 i 1 0\n2 w 1 1 2 0\n3 i -1 0\n4 r 2 3 1 2 0\n5 i -1 0\n6 r 1 5 1 0\n")
    code, out, _ = run(capsys, "expand", "--cnf", d / "f.cnf", "--proof", d / "w.res", "-o", d / "t.dnft")
    assert code == 0 and "weakening" in out


def test_expand_invalid_input(xnx_files, capsys):
    d = xnx_files
    (d / "bad.res").write_text("1 i 1 0\n2 i -1 0\n3 r 1 2 1 1 0\n")
    code, _, _ = run(capsys, "expand", "--cnf", d / "f.cnf", "--proof", d / "bad.res", "-o", d / "t.dnft")
    assert code == 1 and not (d / "t.dnft").exists()


def test_gen_and_prove(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "php", "--pigeons", 3, "--holes", 2)
    assert code == 0 and out.startswith("p cnf 6 9\n") and out.count(" 0\n") == 9
    run(capsys, "gen", "chain", "--length", 3, "-o", tmp_path / "c.cnf")
    code, out, _ = run(capsys, "prove", "--cnf", tmp_path / "c.cnf", "--max-width", 2, "-o", tmp_path / "c.res")
    assert code == 0 and (tmp_path / "c.res").read_text().endswith("0\n")
    (tmp_path / "sat.cnf").write_text("p cnf 2 1\n1 2 0\n")
    code, _, _ = run(capsys, "prove", "--cnf", tmp_path / "sat.cnf", "--max-width", 3, "-o", tmp_path / "s.res")
    assert code == 3


def test_stats(xnx_files, capsys):
    code, out, _ = run(capsys, "stats", "--proof", xnx_files / "p.res", "--kind", "res")
    assert code == 0 and "lines=3" in out and "width=1" in out and "leaves=2" in out


def test_console_script_runs():
    r = subprocess.run([sys.executable, "-m", "narrowres.cli", "gen", "chain", "--length", "2"],
                       capture_output=True, text=True, check=True)
    assert r.stdout == "p cnf 2 3\n1 0\n-1 2 0\n-2 0\n"
