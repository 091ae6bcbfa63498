import csv
import io
import json
import subprocess
import sys

import pytest

from starlex.cli import ORDER_COLUMNS, main, parse_alphas, parse_ns, UsageError
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_order_k1_tie_class(capsys):
    code, out, _ = run(capsys, "order", "--graph", "k1", "--n", "4", "--alpha", "0")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ORDER_COLUMNS
    assert len(rows) == 5
    assert [r["tie_class"] for r in rows].count("0") == 3


def test_order_c3_strict(capsys):
    code, out, _ = run(capsys, "order", "--graph", "c3", "--root", "0", "--n", "5", "--alpha", "1/2")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["rank"] for r in rows] == [str(i) for i in range(1, 8)]


def test_order_is_byte_stable(capsys):
    argv = ("order", "--graph", "k4e", "--n", "5", "--alpha", "0.25")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_order_multiple_jobs_and_threads(capsys, monkeypatch):
    monkeypatch.setenv("STARLEX_THREADS", "4")
    code, out, _ = run(capsys, "order", "--graph", "p3", "--n", "2-3", "--alpha", "0,1/2")
    assert code == 0
    heads = [line for line in out.splitlines() if line.startswith("#")]
    assert heads == ["# n=2 alpha=0/1", "# n=3 alpha=0/1", "# n=2 alpha=1/2", "# n=3 alpha=1/2"]


def test_order_json(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, out, _ = run(capsys, "order", "--n", "3", "--format", "json", "--output", str(dest))
    assert code == 0 and out == ""
    data = json.loads(dest.read_text())
    assert data["claim"] == "main_theorem" and data["verdict"] == "pass"


def test_order_violation_exit_1(capsys):
    code, _, err = run(capsys, "order", "--graph", "c3", "--n", "4", "--tol", "5")
    assert code == 1 and "violation" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("order", "--graph", "c3", "--n", "5", "--alpha", "1"),
        ("order", "--n", "0"),
        ("order", "--n", "x"),
        ("order", "--graph", "c2", "--n", "3"),
        ("order", "--graph", "k1", "--root", "3", "--n", "3"),
        ("order", "--n", "3", "--alpha", "abc"),
        ("order", "--n", "3", "--tol", "0"),
        ("fig1", "--alpha", "2"),
        ("check", "--max-n", "0"),
        ("bogus",),
        (),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_edge_list_graph(capsys, tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text("# triangle\n0 1\n1 2\n2 0\n")
    code, out, _ = run(capsys, "order", "--graph", str(f), "--n", "5", "--alpha", "1/2")
    code2, out2, _ = run(capsys, "order", "--graph", "c3", "--n", "5", "--alpha", "1/2")
    assert code == code2 == 0 and out == out2


@pytest.mark.parametrize(
    "text", ["0 1\n1 x\n", "0 1\n0 1\n", "", "0 1 2\n1 2 1\n", "0 1\n2 3\n", "0 1 -1\n"]
)
def test_bad_graph_files_exit_2(capsys, tmp_path, text):
    f = tmp_path / "g.txt"
    f.write_text(text)
    code, _, err = run(capsys, "order", "--graph", str(f), "--n", "3")
    assert code == 2 and "error" in err


def test_check_small(capsys):
    code, out, _ = run(capsys, "check", "--max-n", "5", "--graph", "c3")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "pass"
    assert all(s["failed"] == 0 and s["checked"] > 0 for s in data["suites"])


def test_check_corrupted_graph(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("0 1\nnot an edge\n")
    code, _, err = run(capsys, "check", "--graph", str(f))
    assert code == 2 and "line" in err.lower()


def test_example_command_text(capsys):
    code, out, _ = run(capsys, "fig1", "--alpha", "1/3")
    assert code == 0 and "4/3" in out and "MISMATCH" not in out
    code, out, _ = run(capsys, "fig1", "--alpha", "0")
    assert code == 0 and "sqrt(3)" in out


def test_example_command_json(capsys):
    code, out, _ = run(capsys, "fig1", "--alpha", "1/2", "--format", "json")
    assert code == 0 and json.loads(out)["verdict"] == "pass"


def test_parsers():
    assert parse_alphas(["0.25", "1/3,0"]) == [Fraction(1, 4), Fraction(1, 3), Fraction(0)]
    assert parse_ns("2..4") == [2, 3, 4] and parse_ns("7") == [7]
    with pytest.raises(UsageError):
        parse_ns("5-2")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "starlex", "order", "--n", "3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.startswith("partition,")
