import csv
import json

import pytest

from gentoffoli.cli import run, sweep_rows


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def stats_of(err):
    return dict(line.split("=", 1) for line in err.splitlines() if "=" in line)


def test_decompose_four_control_dirty(capsys):
    code, out, err = call(capsys, "decompose", "cnx", "--controls", "4", "--ancilla", "2", "--kind", "dirty", "--stats")
    assert code == 0
    assert sum(line.startswith("ccx ") for line in out.splitlines()) == 8
    assert stats_of(err)["toffoli_depth"] == "8"


def test_decompose_seven_control_dirty(capsys):
    code, _, err = call(capsys, "decompose", "cnx", "--controls", "7", "--ancilla", "3", "--kind", "dirty", "--stats")
    assert code == 0 and stats_of(err)["toffoli_depth"] == "26"


def test_decompose_lowered_json_stats_file(capsys, tmp_path):
    stats = tmp_path / "s.csv"
    code, out, _ = call(capsys, "decompose", "cnx", "--controls", "5", "--ancilla", "3", "--kind", "clean",
                        "--lower", "--format", "json", "--stats-file", str(stats))
    assert code == 0
    body = json.loads(out)
    assert {g["kind"] for g in body["gates"]} <= {"CNOT", "H", "T", "Tdg"}
    rows = dict(csv.reader(stats.open()))
    assert rows["key"] == "value" and int(rows["two_qubit_depth"]) > 0 and rows["bound"] == "5"


def test_decompose_fanout(capsys):
    code, out, err = call(capsys, "decompose", "fanout", "--targets", "8", "--ancilla", "1", "--kind", "clean", "--stats")
    s = stats_of(err)
    assert code == 0 and s["m_used"] == "1" and int(s["two_qubit_depth"]) <= 6
    assert "ccx" not in out


@pytest.mark.parametrize("gate, size", [("cnx", "--controls"), ("fanout", "--targets")])
def test_verify_exit_matches_report(capsys, gate, size):
    code, out, _ = call(capsys, "verify", gate, size, "6", "--ancilla", "2", "--kind", "dirty", "--lower")
    body = json.loads(out)
    assert code == 0 and body["ok"] is True and body["unitary_equal"] is True


def test_unsupported_exit_code(capsys):
    code, _, err = call(capsys, "decompose", "cnx", "--controls", "5", "--ancilla", "0", "--kind", "clean")
    assert code == 3 and "unsupported" in err
    assert call(capsys, "verify", "cnx", "--controls", "3", "--kind", "dirty")[0] == 3


def test_usage_errors(capsys):
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "decompose", "cnx", "--controls", "3")[0] == 2
    assert call(capsys, "decompose", "cnx", "--controls", "-1", "--kind", "clean")[0] == 2
    assert call(capsys, "sweep", "--controls", "5", "--kind", "clean", "--gate", "fanout", "--metric", "toffoli")[0] == 2
    assert call(capsys, "--help")[0] == 0


def test_sweep_thirty_clean(capsys, tmp_path):
    out = tmp_path / "clean.csv"
    assert call(capsys, "sweep", "--controls", "30", "--kind", "clean", "--out", str(out))[0] == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == 29
    assert rows[0]["bound"] == "" and rows[0]["measured_depth"] == ""
    depths = [int(r["measured_depth"]) for r in rows[1:]]
    bounds = [int(r["bound"]) for r in rows[1:]]
    assert depths == sorted(depths, reverse=True) and bounds == sorted(bounds, reverse=True)
    assert all(b >= d for b, d in zip(bounds, depths))
    assert depths[-1] == 9


def test_sweep_cnot_metric_and_fanout():
    rows = sweep_rows(6, "clean", "cnx", "cnot")
    assert all(b >= d for _, b, d in rows[1:])
    fan = sweep_rows(10, "dirty", "fanout", "cnot")
    assert len(fan) == 9 and all(b >= d for _, b, d in fan)


def test_table(capsys):
    code, out, _ = call(capsys, "table", "--controls", "20", "--ancilla", "6")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,m,d,bound,choice"
    assert "20,6,0,32,scheme1 k=7 p=1 c=7 sizes=7" in lines
