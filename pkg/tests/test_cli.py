import io
import json
import subprocess
import sys

import pytest

from multrec.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_solve_order_one():
    code, out, _ = run("solve", "-e", "z(n+1)=c*z(n)^2; c=3")
    assert code == 0
    assert "alpha(s) = 2^s" in out and "gamma(s) = 2^s - 1" in out


def test_solve_confluent():
    code, out, _ = run("solve", "-e", "z(n+2)=c*z(n+1)^2*z(n)^-1; c=1")
    assert code == 0 and "double root" in out and "confluent" in out


def test_solve_json_from_file(tmp_path):
    path = tmp_path / "fib.rec"
    path.write_text("z(n+2) = c * z(n+1) * z(n); c = 1\n")
    code, out, _ = run("solve", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["exponents"] == [1, 1]


def test_eval_values():
    code, out, _ = run("eval", "-e", "z(n+2)=c*z(n+1)*z(n); c=1; z(0)=2; z(1)=3", "--steps", "0..4")
    assert code == 0
    assert [line.split("value=")[1].split("\t")[0] for line in out.splitlines()] == \
        ["2", "3", "6", "18", "108"]


def test_eval_special_case():
    _, out, _ = run("eval", "-e", "z(n+2)=c*z(n+1)^2*z(n)^-1; c=1; z(0)=2; z(1)=6", "--steps", "3")
    assert "value=54\t" in out


def test_eval_fractions_and_decimal():
    expr = "z(n+1)=c*z(n)^2; c=1/3; z(0)=1/2"
    _, out, _ = run("eval", "-e", expr, "--steps", "2")
    assert "value=1/432" in out
    _, out, _ = run("eval", "-e", expr, "--steps", "2", "--decimal")
    assert "value=0.0023148148148148147" in out


def test_eval_json_document(tmp_path):
    doc = {"order": 1, "exponents": [2], "c": "3", "initial": ["2"],
           "queries": [{"s": 3, "path": "exact"}, {"s": 3, "path": "numeric"},
                       {"s": 3, "path": "logmag"}]}
    path = tmp_path / "p.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run("eval", str(path), "--format", "json")
    assert code == 0
    recs = json.loads(out)
    exact = 3**7 * 2**8
    assert recs[0]["value"] == {"re": str(exact), "im": "0"}
    assert recs[1]["value"]["re"] == pytest.approx(exact, rel=1e-13)
    assert recs[2]["value"] == pytest.approx(__import__("math").log(exact), rel=1e-12)


def test_eval_mod_prints_exponents():
    code, out, _ = run("eval", "-e", "z(n+2)=c*z(n+1)*z(n); c=2", "--steps", "10",
                       "--mod", "1000")
    assert code == 0
    assert "gamma=88 alpha_0=34 alpha_1=55" in out
    assert "value=" not in out


def test_eval_budget_exit_code_keeps_other_rows():
    code, out, _ = run("eval", "-e", "z(n+1)=c*z(n)^2; c=3; z(0)=2", "--steps", "2,30",
                       "--bit-budget", "1000")
    assert code == 4
    assert "s=2\t" in out and "s=30\t" in out and "error=" in out


def test_eval_without_queries_is_an_error():
    code, _, err = run("eval", "-e", "z(n+1)=c*z(n); c=1; z(0)=1")
    assert code == 2 and "no queries" in err


def test_parse_error_exit_code():
    code, _, err = run("solve", "-e", "z(n+2)=c*z(n+1)^1.5")
    assert code == 2 and "line 1, column" in err


def test_two_inputs_rejected(tmp_path):
    path = tmp_path / "x.rec"
    path.write_text("z(n+1)=c*z(n); c=1")
    code, _, _ = run("solve", str(path), "-e", "z(n+1)=c*z(n); c=1")
    assert code == 2


def test_numeric_failure_exit_code():
    code, _, err = run("roots", "-e", "z(n+3)=c*z(n+2)*z(n+1)*z(n); c=1", "--tol", "1e-30")
    assert code == 3


def test_invalid_tolerance_rejected():
    with pytest.raises(SystemExit):
        run("roots", "-e", "z(n+1)=c*z(n); c=1", "--tol", "-1")


def test_roots():
    code, out, _ = run("roots", "-e", "z(n+2)=c*z(n+1)*z(n); c=1")
    assert code == 0
    assert out.startswith("1.6180339887498949\tmultiplicity 1")


@pytest.mark.parametrize("expr", [
    "z(n+2)=c*z(n+1)^3*z(n)^-2; c=2/3; z(0)=1+1i; z(1)=-1/2",
    "z(n+1)=c*z(n)^-2; c=1-2i; z(0)=3",
    "z(n+2)=c*z(n+1)^2*z(n)^-1; c=1; z(0)=2; z(1)=6",
])
def test_verify_passes(expr):
    code, out, _ = run("verify", "-e", expr, "--bound", "25")
    assert code == 0, out
    assert "[FAIL]" not in out


def test_verify_messages():
    _, out, _ = run("verify", "-e", "z(n+2)=c*z(n+1)*z(n)^2; c=2; z(0)=3; z(1)=1/2", "--bound", "40")
    assert "reference formulas: exact match" in out
    assert "oracle vs exact: identical" in out
    assert "spectral drift" in out and "< 1e-09" in out


def test_output_is_deterministic():
    args = ("solve", "-e", "z(n+3)=c*z(n+2)*z(n+1)^-1*z(n)^2; c=5")
    assert run(*args) == run(*args)


def test_bench_small():
    code, out, _ = run("bench", "--exact-s", "2000", "--naive-max", "200")
    assert code == 0
    assert "fast doubling mod 2^61-1" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "multrec", "eval", "-e",
                           "z(n+1)=c*z(n); c=2; z(0)=3", "--steps", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "value=48" in proc.stdout
