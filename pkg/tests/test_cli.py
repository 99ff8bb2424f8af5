import csv
import io
import json
import subprocess
import sys

import pytest

from circum_turan.cli import compare, formula_for, main, parse_range
from circum_turan.constructions import construct_G2
from circum_turan.graph import complete_graph, graph6_decode, graph6_encode
from circum_turan.invariants import ForbiddenFamily
from circum_turan.oracle import Connectivity, OracleResult


def run(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv), out)
    return code, out.getvalue()


def test_exval_text():
    code, text = run("exval", "cycles", "9", "5", "4")
    assert code == 0
    assert "15" in text and "Exact" in text and "G1(9,5)" in text


def test_exval_json_and_csv():
    code, text = run("exval", "paths", "9", "5", "3", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["value"] == 8 and data["status"] == "Exact"
    code, text = run("exval", "cycles", "12", "9", "4", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(text)))
    assert row["value"] == "36" and row["status"] == "LowerBoundOnly"


def test_exval_range_error(capsys):
    code, _ = run("exval", "cycles", "4", "5", "3")
    assert code == 2
    assert "requires 3 <= r < k <= n" in capsys.readouterr().err


def test_usage_errors():
    assert run("exval", "bogus", "1", "2", "3")[0] == 2
    assert run("oracle", "9", "--family", "K4")[0] == 2
    assert run()[0] == 2


def test_construct_outputs_graph6():
    code, text = run("construct", "F", "13", "7", "5", "--verify")
    assert code == 0 and graph6_decode(text.strip()).num_edges == 29
    code, text = run("construct", "turan", "5", "2")
    assert graph6_decode(text.strip()).num_edges == 6
    code, text = run("construct", "G2", "100", "9", "4", "--verify")
    assert code == 0 and graph6_decode(text.strip()).num_edges == 388
    code, text = run("construct", "GrNak", "9", "3", "7", "5", "--verify")
    assert code == 0 and graph6_decode(text.strip()).num_edges == 21


def test_construct_errors(capsys):
    assert run("construct", "G1", "4", "5")[0] == 2
    assert run("construct", "Nope", "4")[0] == 2
    assert run("construct", "G1", "10")[0] == 2
    assert "error" in capsys.readouterr().err


def test_check_verdicts(monkeypatch):
    lines = graph6_encode(complete_graph(4)) + "\n" + graph6_encode(construct_G2(12, 9, 4)) + "\n"
    code, text = run("check", "--family", "K4,C>=9", stdin=lines, monkeypatch=monkeypatch)
    assert code == 0
    assert text.splitlines() == ["violation clique 0 1 2 3", "free"]
    code, _ = run("check", "--family", "K4,C>=9", "--expect-free", stdin=lines, monkeypatch=monkeypatch)
    assert code == 1
    code, text = run("check", "--family", "K4,C>=9", "--format", "json", stdin=lines, monkeypatch=monkeypatch)
    rows = json.loads(text)
    assert [r["line"] for r in rows] == [1, 2] and rows[1]["verdict"] == "free"


def test_check_parse_error_reports_line(monkeypatch, capsys):
    code, text = run("check", "--family", "K3,P4", stdin="Bw\nnot graph6\n", monkeypatch=monkeypatch)
    assert code == 2
    assert text.splitlines() == ["violation clique 0 1 2"]
    assert "line 2" in capsys.readouterr().err


def test_check_reads_file(tmp_path):
    path = tmp_path / "g.g6"
    path.write_text("Bw\n@\n")
    code, text = run("check", str(path), "--family", "K4,C>=5")
    assert code == 0 and text.splitlines() == ["free", "free"]
    assert run("check", str(tmp_path / "missing"), "--family", "K4,C>=5")[0] == 2


@pytest.mark.parametrize(
    "argv, oracle, verdict, code",
    [
        (["9", "--family", "K4,C>=5"], 15, "MATCH", 0),
        (["8", "--family", "K3,C>=5"], 12, "NOT-APPLICABLE", 0),
        (["6", "--family", "K3,C>=4"], 5, "MATCH", 0),
        (["9", "--family", "K5,C>=7", "--connectivity", "two_connected"], 21, "MATCH", 0),
        (["9", "--family", "K3,P5"], 8, "MATCH", 0),
    ],
)
def test_oracle_comparisons(argv, oracle, verdict, code):
    got, text = run("oracle", *argv, "--workers", "1", "--format", "json")
    data = json.loads(text)
    assert got == code
    assert data["oracle"]["max_edges"] == oracle and data["verdict"] == verdict


def test_oracle_text_and_csv():
    code, text = run("oracle", "6", "--family", "K3,C>=4", "--workers", "1")
    assert code == 0 and "MATCH" in text and "witness" in text
    code, text = run("oracle", "6", "--family", "K3,C>=4", "--workers", "1", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(text)))
    assert row["verdict"] == "MATCH" and row["oracle"] == "5"


def test_oracle_budget_incomplete():
    code, text = run("oracle", "9", "--family", "K6,C>=8", "--budget", "100", "--workers", "1",
                     "--format", "json")
    assert code == 1 and json.loads(text)["verdict"] == "INCOMPLETE"


def test_oracle_limits(capsys):
    assert run("oracle", "11", "--family", "K4,C>=5")[0] == 2
    assert "enumeration cap" in capsys.readouterr().err
    assert run("oracle", "9", "--family", "K4,C>=5", "--workers", "0")[0] == 2


def test_compare_rules():
    base = dict(n=9, family="K4,C>=5", connectivity="any", witnesses=[], optimal_classes=1,
                classes=1, explored=1)
    exact = formula_for(9, ForbiddenFamily.cycles(4, 5), Connectivity.ANY)
    assert compare(OracleResult(max_edges=15, complete=True, **base), exact) == "MATCH"
    assert compare(OracleResult(max_edges=14, complete=True, **base), exact) == "MISMATCH"
    assert compare(OracleResult(max_edges=15, complete=False, **base), exact) == "INCOMPLETE"
    lower = formula_for(8, ForbiddenFamily.cycles(3, 5), Connectivity.ANY)
    assert compare(OracleResult(max_edges=9, complete=True, **base), lower) == "MISMATCH"
    assert formula_for(8, ForbiddenFamily.path(3, 5), Connectivity.CONNECTED) is None
    assert formula_for(4, ForbiddenFamily.cycles(3, 5), Connectivity.ANY) is None


def test_audit_command():
    code, text = run("audit", "--k", "5..20", "--n-max", "200", "--format", "json")
    rows = json.loads(text)
    assert code == 0 and len(rows) == 9 and all(r["passed"] for r in rows)
    code, text = run("audit", "--k", "5..8", "--n-max", "40", "--only", "k-2")
    assert code == 0 and "k-2" in text
    assert run("audit", "--only", "nope")[0] == 2
    assert run("audit", "--k", "9..5")[0] == 2


def test_table_cycles_is_monotone():
    code, text = run("table", "cycles", "--k", "7", "--r", "5", "--n", "7..30")
    rows = list(csv.DictReader(io.StringIO(text)))
    values = [int(r["value"]) for r in rows]
    assert code == 0 and len(rows) == 24 and values == sorted(values)


def test_table_crossover_flag():
    code, text = run("table", "cycles2conn", "--k", "8", "--r", "5", "--n", "8..40")
    rows = list(csv.DictReader(io.StringIO(text)))
    flagged = [r for r in rows if r["crossover"] == "true"]
    assert code == 0 and len(flagged) == 1
    first = flagged[0]
    assert int(first["g_a2"]) <= int(first["g_at"])
    earlier = [r for r in rows if int(r["n"]) < int(first["n"])]
    assert all(int(r["g_a2"]) > int(r["g_at"]) for r in earlier)


def test_table_rejects_empty_grid():
    assert run("table", "paths", "--k", "5", "--r", "7", "--n", "5..6")[0] == 2


def test_parse_range():
    assert parse_range("3..5") == range(3, 6)
    assert parse_range("4") == range(4, 5)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "circum_turan", "exval", "cycles", "9", "5", "4",
                           "--format", "json"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 15
