import io
import subprocess
import sys

import pytest

from girth5.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, parse_subset
from girth5.graph import from_edge_list, graph6_decode, is_girth5_free


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def run_proc(*argv):
    return subprocess.run([sys.executable, "-m", "girth5", *argv], capture_output=True, check=False)


def test_parse_subset():
    assert parse_subset("0-3,7, 9-10") == [0, 1, 2, 3, 7, 9, 10]
    assert parse_subset("5") == [5]


def test_construct_incidence_stdout():
    code, out = run("construct", "--method", "incidence", "--q", "2")
    assert code == EXIT_OK
    head, g6 = out.splitlines()
    assert head == "n=14 m=21 girth5_free=yes"
    assert graph6_decode(g6).m == 21


@pytest.mark.parametrize("method,n,m", [("zlower", 14, 21), ("augmented", 14, 23), ("exact", 11, 16)])
def test_construct_methods(tmp_path, method, n, m):
    path = tmp_path / "g.g6"
    code, out = run("construct", "--n", str(n), "--method", method, "--out", str(path))
    assert code == EXIT_OK and f"m={m}" in out
    g = graph6_decode(path.read_bytes().strip())
    assert g.m == m and is_girth5_free(g)


def test_construct_edge_list_output(tmp_path):
    path = tmp_path / "g.txt"
    assert run("construct", "--n", "30", "--out", str(path))[0] == EXIT_OK
    g = from_edge_list(path.read_text())
    assert g.n == 30 and is_girth5_free(g)


def test_construct_usage_errors():
    assert run("construct", "--method", "incidence")[0] == EXIT_USAGE
    assert run("construct", "--method", "zlower")[0] == EXIT_USAGE
    assert run("construct", "--method", "incidence", "--q", "6")[0] == EXIT_USAGE
    assert run("construct", "--method", "exact", "--n", "13")[0] == EXIT_USAGE


def test_verify_pass_and_fail(tmp_path):
    good = tmp_path / "c5.g6"
    good.write_text("DqK\n")
    code, out = run("verify", str(good), "--girth", "--certificate", "0-4")
    assert code == EXIT_OK
    assert "girth5_free=yes" in out and "girth=5" in out and "verdict=pass" in out
    k4 = tmp_path / "k4.g6"
    k4.write_text("C~\n")
    code, out = run("verify", str(k4), "--certificate", "0-3")
    assert code == EXIT_FAIL
    assert "girth5_free=no" in out and "witness=0 1 2" in out and "c4_witness=" in out


def test_verify_forest_girth_is_inf(tmp_path):
    p = tmp_path / "p.txt"
    p.write_text("3 2\n0 1\n1 2\n")
    code, out = run("verify", str(p), "--girth")
    assert code == EXIT_OK and "girth=inf" in out


def test_verify_bad_inputs(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("C~~\n")
    assert run("verify", str(bad))[0] == EXIT_USAGE
    assert run("verify", str(tmp_path / "missing.g6"))[0] == EXIT_USAGE
    ok = tmp_path / "c5.g6"
    ok.write_text("DqK\n")
    assert run("verify", str(ok), "--certificate", "0,9")[0] == EXIT_USAGE


def test_exact_command():
    code, out = run("exact", "--n", "11")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "mode=girth5 n=11 value=16"
    code, out = run("exact", "--n", "6", "--bipartite")
    assert code == EXIT_OK and "value=6" in out
    assert run("exact", "--n", "13", "--budget", "extended")[0] == EXIT_OK
    assert run("exact")[0] == EXIT_USAGE


def test_exact_table():
    code, out = run("exact", "--table")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert [int(line.split()[0]) for line in lines[1:]] == list(range(6, 13))
    assert all("FAIL" not in line for line in lines)


def test_bounds_command():
    code, out = run("bounds", "--n", "114")
    assert code == EXIT_OK
    assert "e(zlower)         456" in out


def test_sweep_command(tmp_path):
    code, out = run("sweep", "--q", "7,8")
    assert code == EXIT_OK
    rows = out.splitlines()
    assert rows[0].startswith("n,e_base") and rows[1].startswith("114,456,464,")
    csv = tmp_path / "s.csv"
    assert run("sweep", "--q", "7,8", "--csv", str(csv))[0] == EXIT_OK
    assert csv.read_text() == out
    assert run("sweep", "--q", "6")[0] == EXIT_USAGE
    assert run("sweep", "--q", "37")[0] == EXIT_USAGE


def test_probe_command():
    code, out = run("probe", "--q", "5", "--trials", "3", "--seed", "2")
    assert code == EXIT_OK
    assert out.splitlines()[-1].endswith("all_pass=yes")
    assert run("probe", "--q", "6")[0] == EXIT_USAGE
    assert run("probe", "--q", "3", "--delta", "2")[0] == EXIT_USAGE


def test_usage_exit_codes():
    assert run_proc().returncode == EXIT_USAGE
    assert run_proc("frobnicate").returncode == EXIT_USAGE
    assert run_proc("bounds").returncode == EXIT_USAGE
    assert run_proc("--help").returncode == EXIT_OK


@pytest.mark.parametrize("argv", [
    ("construct", "--n", "60"),
    ("exact", "--n", "10"),
    ("sweep", "--q", "3,7"),
    ("probe", "--q", "7", "--trials", "5", "--seed", "11"),
    ("bounds", "--n", "40"),
])
def test_byte_identical_runs(argv):
    a, b = run_proc(*argv), run_proc(*argv)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout
