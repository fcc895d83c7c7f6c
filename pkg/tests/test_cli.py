"""Command-line contract: output shapes, exit codes, determinism."""

import csv
import io
import json
import math
import subprocess
import sys

import jsonschema
import pytest

from gentrig import __version__, cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_json_shape(capsys):
    code, out, _ = run(capsys, "eval", "--family", "arcsin_p", "--p", "2", "--x", "0.5")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, cli.EVAL_SCHEMA)
    assert list(data) == ["family", "x", "p", "q", "value", "err", "path"]
    assert data["value"] == pytest.approx(0.5235987756, abs=1e-10)
    assert data["q"] is None


def test_eval_text_and_csv(capsys):
    code, out, _ = run(capsys, "eval", "--family", "arcsin_pq", "--p", "3", "--q", "1.5",
                       "--x", "0.8", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == cli.CSV_HEADER and rows[1][:3] == ["0.80000000000000004", "3", "1.5"]
    code, out, _ = run(capsys, "eval", "--family", "arctan_p", "--p", "2", "--x", "1",
                       "--format", "text")
    assert code == 0 and "arctan_p(x=1.0, p=2.0) = 0.785398163397448" in out
    assert "[closed_form]" in out


def test_eval_path_selection(capsys):
    code, out, _ = run(capsys, "eval", "--family", "arcsinh_p", "--p", "3", "--x", "0.4",
                       "--path", "quadrature")
    assert json.loads(out)["path"] == "quadrature"


def test_const_b2(capsys):
    code, out, _ = run(capsys, "const", "--name", "b_p", "--p", "2")
    assert code == 0 and json.loads(out)["value"] == pytest.approx(math.pi / 4, abs=1e-12)
    code, out, _ = run(capsys, "const", "--name", "pi_pq", "--p", "2", "--q", "2", "--verify")
    assert json.loads(out)["value"] == pytest.approx(math.pi, rel=1e-12)


def test_divergence_is_domain_exit(capsys):
    code, out, err = run(capsys, "eval", "--family", "arcsin_p", "--p", "0.5", "--x", "1")
    assert code == 2 and out == ""
    msg = json.loads(err)
    assert msg["error"] == "DivergenceError" and "p <= 1" in msg["message"]


@pytest.mark.parametrize("argv", [
    ["eval", "--family", "arcsin_pq", "--p", "2", "--x", "0.5"],
    ["eval", "--family", "sin_p", "--p", "2", "--x", "0.5"],
    ["eval", "--family", "nope", "--p", "2", "--x", "0.5"],
    ["eval", "--family", "arcsin_p", "--p", "2", "--x", "1.5"],
    ["invert", "--family", "tan_p", "--p", "2", "--y", "3"],
    ["const", "--name", "pi_pq", "--p", "2"],
    ["verify", "--suite", "nope"],
    ["verify"],
    ["verify", "--suite", "thm1-arcsin", "--all-theorems"],
    ["verify", "--suite", "thm1-arcsin", "--x-grid", "1:0:3"],
    ["verify", "--suite", "thm1-arcsin", "--format", "csv"],
    ["table", "--family", "pi_p", "--p-grid", "1.5:3:3", "--x", "0.5"],
])
def test_usage_and_domain_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in json.loads(err)


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["eval", "--family", "arcsin_p"])
    assert info.value.code == 2


def test_convergence_failure_exit_3(capsys):
    # forcing the series next to its radius of convergence exhausts max_terms
    code, _, err = run(capsys, "eval", "--family", "arcsin_p", "--p", "2", "--x", "0.99999",
                       "--path", "series")
    assert code == 3
    assert json.loads(err)["error"] == "ConvergenceError"


def test_env_tolerances_reach_report_meta(capsys, monkeypatch):
    monkeypatch.setenv("GENTRIG_REL_TOL", "1e-10")
    code, out, _ = run(capsys, "verify", "--suite", "remD-b")
    assert json.loads(out)["meta"]["tolerances"]["rel_tol"] == 1e-10
    code, out, _ = run(capsys, "verify", "--suite", "remD-b", "--rel-tol", "1e-11")
    assert json.loads(out)["meta"]["tolerances"]["rel_tol"] == 1e-11
    monkeypatch.setenv("GENTRIG_ABS_TOL", "abc")
    assert run(capsys, "verify", "--suite", "remD-b")[0] == 2


def test_invert(capsys):
    code, out, _ = run(capsys, "invert", "--family", "sinh_p", "--p", "2", "--y", "0.8813735870")
    assert code == 0 and json.loads(out)["value"] == pytest.approx(1.0, abs=1e-9)


def test_verify_thm1_arcsin(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm1-arcsin")
    data = json.loads(out)
    jsonschema.validate(data, cli.REPORT_SCHEMA)
    assert code == 0 and data["pass"] is True and data["conjecture"] is False
    assert data["meta"]["version"] == __version__
    assert data["meta"]["grids"] == {"s": "1.1:5.0:20", "x": "0.1:0.9:9"}


def test_verify_remd_minimum(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "remD-b")
    data = json.loads(out)
    assert data["min_margin"] == pytest.approx(0.01739, abs=1e-5)
    assert data["argmin"] == {"s": 3.0}


def test_conjecture_report(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "conj2-sin")
    data = json.loads(out)
    jsonschema.validate(data, cli.REPORT_SCHEMA)
    assert code == 0 and data["conjecture"] is True


def test_grid_overrides(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm1-arctan", "--x-grid", "0.2:0.8:3",
                       "--s-grid", "2:4:3@log")
    data = json.loads(out)
    assert len(data["records"]) == 9
    assert data["meta"]["grids"]["s"] == "2.0:4.0:3@log"


def test_failing_theorem_suite_exits_1(capsys, monkeypatch):
    from gentrig import analysis
    bad = analysis.ScanReport("thm1-arcsin", [analysis.InequalityRecord({"x": 0.5}, 1, 0, -1, 0)])
    monkeypatch.setattr(analysis, "run_suite", lambda *a, **k: bad)
    code, out, _ = run(capsys, "verify", "--suite", "thm1-arcsin")
    assert code == 1 and json.loads(out)["pass"] is False


def test_bundles_and_list(capsys):
    code, out, _ = run(capsys, "scan", "--all-conjectures")
    data = json.loads(out)
    assert code == 0 and data["meta"]["bundle"] == "all-conjectures"
    for rep in data["reports"]:
        jsonschema.validate(rep, cli.REPORT_SCHEMA)
        assert rep["conjecture"] is True
    code, out, _ = run(capsys, "verify", "--list")
    assert "thm1-arcsin" in out.split() and "conj2-sin" not in out.split()


def test_table_pi_p(capsys):
    code, out, _ = run(capsys, "table", "--family", "pi_p", "--p-grid", "1.5:10:18")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert out.splitlines()[0] == "x,p,q,value,err"
    assert len(rows) == 18
    ps = [float(r["p"]) for r in rows]
    assert all(a < b for a, b in zip(ps, ps[1:]))
    assert all(r["x"] == "" and r["q"] == "" for r in rows)


def test_table_b_p(capsys):
    code, out, _ = run(capsys, "table", "--family", "b_p", "--p-grid", "2:4:3")
    rows = [(float(r["p"]), float(r["value"])) for r in csv.DictReader(io.StringIO(out))]
    assert rows[0] == (2.0, pytest.approx(math.pi / 4, abs=1e-15))
    assert rows[1][1] == pytest.approx(0.8356488482647, abs=1e-12)
    assert rows[2][1] == pytest.approx(0.8669729873399, abs=1e-12)


def test_table_classical_arcsin(capsys):
    code, out, _ = run(capsys, "table", "--family", "arcsin_p", "--p", "2", "--x-grid",
                       "0:0.9:10")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 10
    for r in rows:
        assert float(r["value"]) == pytest.approx(math.asin(float(r["x"])), abs=1e-10)
        assert len(r["value"].replace("0.", "", 1).lstrip("0")) >= 15 or float(r["value"]) == 0


def test_table_inverse_and_json(capsys):
    code, out, _ = run(capsys, "table", "--family", "tan_p", "--p", "3", "--x-grid",
                       "0.1:0.5:3", "--format", "json")
    data = json.loads(out)
    assert len(data) == 3 and all(d["family"] == "tan_p" for d in data)


def test_output_file_and_byte_identical_reruns(tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        proc = subprocess.run([sys.executable, "-m", "gentrig.cli", "verify", "--suite",
                               "thm2-arcsin-pq-in-q", "--output", str(path)],
                              capture_output=True)
        assert proc.returncode == 0 and proc.stdout == b""
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
