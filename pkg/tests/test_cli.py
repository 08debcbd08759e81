#!/usr/bin/env python3
"""
Tests for the braid notation parser and the command line.
"""

import io
import json
import random

import pytest

from braidtools.braidword import NormalForm, exponent_sum, normalize
from braidtools.cli import parse_braid, parse_expr, run
from braidtools.errors import BadPower, BraidSyntaxError, IndexOutOfRange, NotParallel
from braidtools.oracle import random_word
from braidtools.periodic import PeriodicSolver, VerdictKind

from conftest import cycles, nf


def run_cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_parse_b13_example(b13_alpha):
    assert normalize(parse_braid(13, "d^3 [13,10][12,11][6,4]")) == b13_alpha


def test_parse_wraparound_cycle():
    g = normalize(parse_braid(10, "[12,11,10,9]"))
    assert g == NormalForm(10, 0, (cycles(10, [10, 9, 2, 1]),))


def test_parse_generators():
    conjugate = normalize(parse_braid(6, "s(1)^-1 d s(1)"))
    assert conjugate == nf(6, 0, [[6, 5, 4, 3, 1]], [[2, 1]])
    assert exponent_sum(conjugate) == 5
    assert normalize(parse_braid(6, "a(2,5)")) == normalize(parse_braid(6, "[5,2]"))
    assert normalize(parse_braid(6, "s(3)")) == normalize(parse_braid(6, "a(4,3)"))
    assert normalize(parse_braid(6, "e")) == NormalForm.identity(6)
    assert normalize(parse_braid(6, "d^-2")) == NormalForm.delta_power(6, -2)
    assert normalize(parse_braid(6, "[2,1]^3")) == normalize(parse_braid(6, "[2,1] [2,1] [2,1]"))
    assert normalize(parse_braid(6, "[4,3][2,1]^-1 [4,3][2,1]")) == NormalForm.identity(6)
    assert normalize(parse_braid(6, "s(1)^0")) == NormalForm.identity(6)


def test_juxtaposed_cycles():
    expr = parse_expr(6, "[4,3][5,2,1]")
    assert len(expr.terms) == 1
    factors, power = expr.terms[0]
    assert factors == [cycles(6, [4, 3], [5, 2, 1])] and power == 1

    # a shared index starts a new factor; [2,1] is parallel to [4,3] and joins it
    factors, _ = parse_expr(6, "[4,2][4,3][2,1]").terms[0]
    assert factors == [cycles(6, [4, 2]), cycles(6, [4, 3], [2, 1])]


def test_parse_errors():
    with pytest.raises(BraidSyntaxError):
        parse_braid(6, "x")
    with pytest.raises(BraidSyntaxError):
        parse_braid(6, "[4]")
    with pytest.raises(BraidSyntaxError):
        parse_braid(6, "dd")
    with pytest.raises(IndexOutOfRange):
        parse_braid(6, "s(6)")
    with pytest.raises(IndexOutOfRange):
        parse_braid(6, "a(7,1)")
    with pytest.raises(IndexOutOfRange):
        parse_braid(6, "[12,1]")
    with pytest.raises(NotParallel):
        parse_braid(4, "[3,1][4,2]")
    with pytest.raises(BadPower):
        parse_braid(6, "d^x")


def test_printed_normal_forms_parse_back():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 10)
        g = normalize(random_word(n, rng.randint(0, 8), rng))
        assert normalize(parse_braid(n, str(g))) == g


def test_parsed_conjugate_of_delta_solves():
    verdict = PeriodicSolver().solve(normalize(parse_braid(6, "s(1)^-1 d s(1)")))
    assert (verdict.kind, verdict.k) == (VerdictKind.DELTA_TYPE, 1)


def test_nf_command():
    code, out = run_cli("nf", "-n", "6", "d^3 [4,2][4,3][2,1]")
    assert code == 0
    assert out == "d^3 [4,3,2,1]\n"


def test_solve_commands():
    code, out = run_cli("solve", "-n", "6", "d")
    assert (code, out) == (0, "delta-type k=1 gamma=e verified=true\n")

    code, out = run_cli("solve", "-n", "13", "d^3 [13,10][12,11][6,4]")
    assert code == 0
    assert out.startswith("epsilon-type k=3 gamma=")
    assert out.strip().endswith("verified=true")

    code, out = run_cli("solve", "-n", "3", "s(1)")
    assert (code, out) == (0, "non-periodic\n")


def test_solve_json():
    code, out = run_cli("solve", "-n", "13", "--json", "d^3 [13,10][12,11][6,4]")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["kind"] == "epsilon-type" and data["k"] == 3
    assert data["verified"] is True
    assert data["input"] == {"n": 13, "inf": 3, "factors": [[[13, 10], [12, 11], [6, 4]]]}
    assert data["merge_rounds"][0] == ["[13,10]", "[10,7]", "[7,4]"]
    assert data["pure_strand"] == 4


def test_solve_no_verify():
    code, out = run_cli("solve", "-n", "6", "--no-verify", "d^2")
    assert (code, out) == (0, "delta-type k=2 gamma=e verified=skipped\n")


def test_nf_json():
    code, out = run_cli("nf", "-n", "6", "--json", "d^3 [4,3][5,2,1] d^3 [4,3][5,2,1]")
    data = json.loads(out)
    assert data["inf"] == 6
    assert data["factors"] == [[[6, 1], [5, 4, 3, 2]], [[5, 2, 1]]]
    assert data["sup"] == 8


def test_power_conj_command():
    code, out = run_cli("power-conj", "-n", "13", "-r", "12", "d [2,1]")
    assert code == 0
    assert out.startswith("h=d^13 ")
    assert "iterations=4" in out and out.strip().endswith("verified=true")


def test_oracle_commands():
    code, out = run_cli("sss-brute", "-n", "6", "-k", "3")
    assert code == 0
    assert "d^3 [5,2,1][4,3]" in out.splitlines()
    assert out.splitlines()[-1].startswith("size=")

    code, out = run_cli("uss-bound", "-n", "6", "-u", "2", "-k", "3")
    assert code == 0
    assert out.splitlines()[-1] == "count=5 catalan=5 distinct=true"

    code, out = run_cli("props", "-n", "5", "--seed", "4", "--samples", "20")
    assert code == 0
    assert out.splitlines()[-1] == "all passed"


def test_errors_exit_nonzero(capsys):
    code = run(["nf", "-n", "4", "[3,1][4,2]"], out=io.StringIO())
    assert code == 1
    assert capsys.readouterr().err.startswith("Error:")

    code = run(["uss-bound", "-n", "6", "-u", "1", "-k", "3"], out=io.StringIO())
    assert code == 1
