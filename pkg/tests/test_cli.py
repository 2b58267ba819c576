import json
import subprocess
import sys

import pytest

from hooklens.cli import default_threads, main, parse_config


def run_cli(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_han_passes(capsys, tmp_path):
    table = tmp_path / "series.tsv"
    code, out, _ = run_cli(capsys, "verify-han", "--ell", "3", "--max-n", "30", "--table", str(table))
    assert code == 0
    assert json.loads(out)["mismatches"] == []
    assert table.read_text().startswith("# ell=3 order=30\n")


def test_zero_modulus_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "equidist", "--ell", "1", "--mod", "0")
    assert code == 2
    assert "usage" in err


@pytest.mark.parametrize("argv", [
    ["equidist", "--mod", "3", "--residue", "3"],
    ["equidist", "--max-n", "500", "--order", "400"],
    ["arcs", "--ell", "0"],
    ["nonsense"],
    ["ineq", "--threads", "0"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run_cli(capsys, *argv)[0] == 2


def test_arcs_report(capsys):
    code, out, _ = run_cli(capsys, "arcs", "--mod", "12", "--ell", "2")
    report = json.loads(out)
    assert code == 0
    assert len(report["entries"]) == 11
    assert all(e["real"] < 0 for e in report["entries"])


def test_equidist_csv_is_thread_independent(capsys):
    outs = []
    for threads in ("1", "4"):
        code, out, _ = run_cli(capsys, "equidist", "--ell", "2", "--mod", "3", "--max-n", "120",
                               "--format", "csv", "--threads", threads)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    assert outs[0].splitlines()[0] == "n,a,exact,main_term,rel_error"


def test_ineq_csv_is_thread_independent(capsys):
    outs = [run_cli(capsys, "ineq", "--mod", "3", "--max-n", "150", "--format", "csv", "--threads", t)[1]
            for t in ("1", "3")]
    assert outs[0] == outs[1]


def test_ineq_failure_exit_code(capsys):
    # for b = 5 the residue sequences have not settled by n = 300
    code, out, _ = run_cli(capsys, "ineq", "--mod", "5", "--residue", "0", "--max-n", "300")
    assert code == 1
    report = json.loads(out)
    assert not report["passed"]
    assert len(report["conjectures"]) == 40


def test_output_file(capsys, tmp_path):
    target = tmp_path / "oracle.json"
    code, out, _ = run_cli(capsys, "oracle", "--ell", "2", "--max-n", "8", "--output", str(target))
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data["polynomials"]["2"] == [0, 2]


def test_thread_default_from_environment(monkeypatch):
    monkeypatch.setenv("HOOKLENS_THREADS", "3")
    assert default_threads() == 3
    assert parse_config(["arcs"]).threads == 3
    monkeypatch.setenv("HOOKLENS_THREADS", "junk")
    assert default_threads() >= 1


@pytest.mark.slow
def test_asym_command(capsys):
    code, out, _ = run_cli(capsys, "asym", "--ell", "2")
    assert code == 0
    assert json.loads(out)["passed"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hooklens", "arcs", "--mod", "3", "--format", "csv"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0].startswith("k,xi_re")
