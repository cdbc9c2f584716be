import csv
import io
import json
import math
import subprocess
import sys

import pytest

from stablelaw import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_eval_cf_normal(capsys):
    code, out, _ = run(capsys, "eval", "cf", "--alpha", "2", "--c", "0.7071068", "--beta", "0", "--mu", "0",
                       "--grid", "0,3,4")
    assert code == 0
    assert out.splitlines()[0] == "t,re,im,modulus"
    data = rows(out)
    assert [float(r["t"]) for r in data] == [0.0, 1.0, 2.0, 3.0]
    for r in data:
        t = float(r["t"])
        assert float(r["modulus"]) == pytest.approx(math.exp(-t * t / 2), rel=1e-6)


def test_eval_pdf_cauchy(capsys):
    code, out, _ = run(capsys, "eval", "pdf", "--alpha", "1", "--c", "1", "--beta", "0", "--mu", "0",
                       "--grid", "-2,2,5")
    assert code == 0
    data = rows(out)
    assert len(data) == 5
    assert float(data[2]["value"]) == pytest.approx(0.3183099, abs=1e-7)


def test_eval_levy_density_negative_grid(capsys):
    code, out, _ = run(capsys, "eval", "levy-density", "--alpha", "1", "--c", "1", "--beta", "1",
                       "--grid", "-1,-0.5,2")
    assert code == 0
    assert [float(r["value"]) for r in rows(out)] == [0.0, 0.0]


def test_eval_cdf_single_point(capsys):
    code, out, _ = run(capsys, "eval", "cdf", "--alpha", "1", "--grid", "0,1,1")
    assert code == 0
    (r,) = rows(out)
    assert float(r["value"]) == pytest.approx(0.5, abs=1e-10)


def test_json_output(capsys):
    code, out, _ = run(capsys, "eval", "cf", "--alpha", "1.5", "--beta", "0.5", "--grid", "-1,1,3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    meta = payload["metadata"]
    assert meta["params"]["alpha"] == 1.5 and meta["params"]["grid"] == [-1.0, 1.0, 3]
    assert meta["tolerances"]["abs_tol"] == 1e-8
    assert meta["build"].startswith("0.1.0+")
    assert [set(r) for r in payload["rows"]] == [{"t", "re", "im", "modulus"}] * 3


def test_output_path(tmp_path, capsys):
    target = tmp_path / "out.csv"
    code, out, _ = run(capsys, "eval", "pdf", "--alpha", "2", "--grid", "0,1,2", "--output-path", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("x,value\n")
    code, _, _ = run(capsys, "eval", "pdf", "--alpha", "2", "--grid", "0,1,2", "--output_path", str(target))
    assert code == 0


def test_deterministic(capsys):
    args = ("eval", "pdf", "--alpha", "0.8", "--beta", "-0.4", "--grid", "-3,3,7", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


@pytest.mark.parametrize("argv", [
    ("eval", "pdf", "--alpha", "3", "--grid", "0,1,2"),
    ("eval", "pdf", "--alpha", "1", "--grid", "1,0,2"),
    ("eval", "pdf", "--alpha", "1", "--grid", "0,1,0"),
    ("eval", "pdf", "--alpha", "1", "--grid", "0,1"),
    ("eval", "pdf", "--grid", "0,1,2"),
    ("eval", "bogus", "--alpha", "1", "--grid", "0,1,2"),
    ("eval", "pdf", "--alpha", "1", "--beta", "2", "--grid", "0,1,2"),
    ("eval", "pdf", "--alpha", "1", "--grid", "0,1,2", "--abs-tol", "-1"),
    ("eval", "pdf", "--alpha", "1", "--grid", "0,1,2", "--max-segments", "2"),
    ("eval", "levy-density", "--alpha", "2", "--grid", "1,2,2"),
    ("verify", "--suite", "nope"),
    ("tail-balance", "--p", "0.5", "--q", "0.6", "--k", "0.5"),
    ("tail-balance", "--p", "0.7", "--q", "0.3", "--k", "1.5"),
    ("tail-balance", "--p", "1", "--q", "0", "--k", "0.5", "--probe", "10,100"),
    ("lk-check", "--alpha", "2", "--grid", "0,1,2"),
    (),
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "error" in err


def test_nonconvergence_exit_code(capsys):
    code, out, err = run(capsys, "eval", "cdf", "--alpha", "0.5", "--beta", "1", "--grid", "0.5,2,3",
                         "--max-segments", "8", "--accel-depth", "2", "--abs-tol", "1e-15", "--rel-tol", "1e-15")
    assert code == 3
    assert out == ""
    assert "x=0.5" in err


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "stability")
    assert code == 0
    data = rows(out)
    assert data and all(r["status"] == "PASS" for r in data)
    assert list(data[0]) == ["suite", "check", "residual", "tolerance", "status"]
    defect = next(r for r in data if r["check"] == "functional equation defect")
    assert float(defect["residual"]) <= 1e-10


def test_verify_failure_exit_code(capsys, monkeypatch):
    from stablelaw import verify

    monkeypatch.setitem(verify.SUITES, "special",
                        lambda config: [verify.Check("special", "forced", 1.0, 0.5),
                                        verify.Check("special", "fine", 0.0, 0.5)])
    code, out, _ = run(capsys, "verify", "--suite", "special")
    assert code == 1
    assert [r["status"] for r in rows(out)] == ["FAIL", "PASS"]


def test_tail_balance_command(capsys):
    code, out, _ = run(capsys, "tail-balance", "--p", "0.7", "--q", "0.3", "--k", "0.5")
    assert code == 0
    data = rows(out)
    assert [r["x"] for r in data] == ["100.0", "1000.0", "10000.0", "limit"]
    assert float(data[-1]["k_over_h"]) == pytest.approx(0.4, abs=1e-12)
    assert float(data[-1]["c_prime"]) == pytest.approx(0.4, rel=0.05)
    code, out, _ = run(capsys, "tail-balance", "--p", "0.7", "--q", "0.3", "--k", "1.5", "--center",
                       "--probe", "100,1000,10000", "--format", "json")
    assert code == 0
    assert json.loads(out)["rows"][-1]["c_prime"] == pytest.approx(-0.4, rel=0.05)


def test_lk_check_command(capsys):
    code, out, _ = run(capsys, "lk-check", "--alpha", "0.7", "--c", "1.5", "--beta", "-0.5", "--grid", "-3,3,4")
    assert code == 0
    data = rows(out)
    assert len(data) == 4 and all(r["status"] == "PASS" for r in data)
    assert all(float(r["residual"]) <= 1e-6 for r in data)


def test_help_documents_columns(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["--help"])
    assert info.value.code == 0
    out = capsys.readouterr().out
    assert "t, re, im, modulus" in out and "Exit codes" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stablelaw", "eval", "pdf", "--alpha", "1", "--grid", "-1,1,3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "x,value"
    proc = subprocess.run([sys.executable, "-m", "stablelaw", "eval", "pdf"], capture_output=True, text=True)
    assert proc.returncode == 2
