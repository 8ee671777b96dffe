import json
import os
import subprocess
import sys

import pytest

from fcq.cli.expr import EvalError, ParseError, evaluate, int_value, parse
from fcq.cli.main import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


# -- parser ---------------------------------------------------------------------

def test_precedence():
    assert evaluate(parse("2+3*4"), {}) == 14
    assert evaluate(parse("-2^2"), {}) == -4
    assert evaluate(parse("(1+1)^3 - 2*3"), {}) == 2
    assert evaluate(parse("2**3"), {}) == 8
    assert int_value(parse("-(2+1)")) == -3


@pytest.mark.parametrize("bad", ["", "1 +", "(1", "1)", "x^y", "2^^3", "a $ b", "f(1,)", "x^2^3"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_negative_exponents():
    assert parse("x^-2") == ("pow", ("name", "x"), -2)
    assert parse("x^(-2)") == ("pow", ("name", "x"), -2)


def test_eval_errors():
    with pytest.raises(EvalError):
        evaluate(parse("zz"), {})
    with pytest.raises(EvalError):
        evaluate(parse("g(1)"), {})
    with pytest.raises(EvalError):
        evaluate(parse("2^-1"), {})


# -- compute ---------------------------------------------------------------------

@pytest.mark.parametrize("argv,want", [
    (["--alg", "weyl", "--p", "3", "d*x"], "x*d + h"),
    (["--alg", "weyl", "d*x - x*d"], "h"),
    (["--alg", "weyl", "--p", "3", "x^3*d^3 - (w^3 - h^2*w)"], "0"),
    (["--alg", "qtorus", "y*x"], "q*x*y"),
    (["--alg", "qtorus", "--n", "2", "f(1)*y*x - q*f(1)*x*y"], "0"),
    (["--alg", "coulomb", "--r", "1", "--p", "3", "e(1)*e(1)"], "e(2)"),
    (["--alg", "coulomb", "--r", "1", "--p", "3", "e(1)*e(-1)"], "(w + 2*h)*e(0)"),
    (["--alg", "cohom", "--p", "3", "P(1, b^2)"], "2*b^4"),
    (["--alg", "cohom", "--p", "5", "AS(b) - St(b)"], "0"),
])
def test_compute_examples(capsys, argv, want):
    code, out, _ = run(capsys, "compute", *argv)
    assert code == 0
    assert out == want


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--alg", "qtorus", "--format", "json", "y*x")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == "fcq/1"
    assert doc["result"]["alg"] == "qtorus"
    assert doc["text"] == "q*x*y"


def test_compute_exit_codes(capsys):
    assert run(capsys, "compute", "--alg", "weyl", "x +* 2")[0] == 2
    assert run(capsys, "compute", "--alg", "weyl", "d^-1")[0] == 3
    assert run(capsys, "compute", "--alg", "coulomb", "--p", "4", "e(1)")[0] == 2
    assert run(capsys, "compute", "--alg", "coulomb", "--p", "3,5", "e(1)")[0] == 2
    assert run(capsys, "compute", "--alg", "cohom", "P(1, St(b))")[0] == 3


# -- verify / describe ---------------------------------------------------------------

def test_verify_zeta_includes_named_check(capsys):
    code, out, _ = run(capsys, "verify", "--only", "zeta", "--p", "3")
    assert code == 0
    assert "gamma-delta-zeta = -1" in out


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--only", "zeta,sign-lemma", "--p", "3,5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "fcq/1" and doc["passed"]
    names = [(r["check"], r["params"]["p"], r["name"]) for r in doc["results"]]
    assert ("zeta", 5, "gamma-delta-zeta = -2") in names
    assert all("elapsed" not in g for g in doc["groups"])


def test_verify_empty_selection(capsys):
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "--only", "")[0] == 2
    assert run(capsys, "verify", "--only", "nope")[0] == 2
    assert run(capsys, "verify", "--only", "zeta", "--p", "9")[0] == 2


def test_verify_failure_exit_code(capsys):
    # the literal product rule fails for mixed signs, so the exit code is 1
    code, out, _ = run(capsys, "verify", "--only", "qtorus-product", "--r", "1")
    assert code == 1
    assert "[FAIL] qtorus-product r=1: f(1)*f(-1)" in out


def test_verify_is_deterministic(capsys):
    argv = ["verify", "--only", "frobenius-twist,adams,steenrod-additivity", "--p", "3", "--seed", "7",
            "--format", "json"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    assert json.loads(first)["config"]["seed"] == 7


def test_verify_parallel_matches_serial():
    argv = [sys.executable, "-m", "fcq.cli.main", "verify", "--only", "zeta,tate-regular,coulomb-frobenius",
            "--p", "3,5", "--r", "1,2", "--format", "json"]
    serial = subprocess.run(argv, capture_output=True, text=True, env={**os.environ, "FCQ_THREADS": "1"})
    parallel = subprocess.run(argv, capture_output=True, text=True, env={**os.environ, "FCQ_THREADS": "3"})
    assert serial.returncode == parallel.returncode == 0
    assert serial.stdout == parallel.stdout


def test_describe(capsys):
    code, out, _ = run(capsys, "describe", "fermat-falling-factorial")
    assert code == 0 and "T^p - h^(p-1) T" in out
    code, out, _ = run(capsys, "describe", "sign-lemma")
    assert code == 0 and "C(p, 2)" in out
    assert run(capsys, "describe", "unknown")[0] == 2
    code, out, _ = run(capsys, "describe")
    assert code == 0 and "zeta" in out
