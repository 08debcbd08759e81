#!/usr/bin/env python3
"""
Tests for the periodic braid arithmetic and the conjugacy solver.
"""

import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from braidtools.braidword import BraidWord, DeltaPower, NormalForm, Simple, power
from braidtools.conjugacy import Conjugator, apply, compose, to_super_summit
from braidtools.errors import BadParameters, NotInSSS, NotReduced
from braidtools.oracle import SummitOracle
from braidtools.periodic import (
    ARTIN,
    BKL,
    DELTA,
    EPSILON,
    CycleMergeTrace,
    PeriodicSolver,
    SolverConfig,
    VerdictKind,
    bcmw_exponent,
    central_exponent,
    classify_pc,
    classify_periodic,
    epsilon_reduction,
    is_bcmw_power,
    t_inf_periodic,
)

from conftest import cycles, epsilon, nf, random_conjugator


def test_t_inf_examples():
    assert t_inf_periodic(EPSILON, 1, 10) == Fraction(10, 9)
    assert t_inf_periodic(DELTA, 5, 7) == Fraction(5)
    assert t_inf_periodic(EPSILON, 3, 13) == Fraction(13, 4)
    assert t_inf_periodic(DELTA, 3, 9, ARTIN) == Fraction(2, 3)
    assert t_inf_periodic(EPSILON, 5, 10, ARTIN) == Fraction(10, 9)
    with pytest.raises(BadParameters):
        t_inf_periodic("sigma", 1, 5)
    assert central_exponent(9, BKL) == 9
    assert central_exponent(9, ARTIN) == 2


def test_classify_pc_examples():
    assert classify_pc(10, 9, 10) == (True, True)
    assert classify_pc(2, 9, 2) == (False, True)
    assert classify_pc(10, 9, 2) == (True, True)
    for p in range(-4, 9):
        assert classify_pc(p, 1, 4) == (True, p % 4 == 0)
    with pytest.raises(NotReduced):
        classify_pc(4, 2, 2)


# (structure, kind, n): k values marked "**" (P-minimal, C-tight) and "*" (P-minimal only)
PERIODIC_TABLE = [
    ((ARTIN, DELTA, 9), {5, 6, 9}, set()),
    ((ARTIN, DELTA, 10), {6}, {1, 5}),
    ((BKL, EPSILON, 10), {1, 3, 9}, set()),
    ((BKL, EPSILON, 11), {1, 2, 5}, set()),
]


@pytest.mark.parametrize("column, double, single", PERIODIC_TABLE)
def test_periodic_table_markings(column, double, single):
    structure, kind, n = column
    for k in range(1, 10):
        _, p_minimal, c_tight = classify_periodic(kind, k, n, structure)
        if k in double:
            assert (p_minimal, c_tight) == (True, True)
        elif k in single:
            assert (p_minimal, c_tight) == (True, False)
        else:
            assert not p_minimal


def test_small_counterexample_is_c_tight_but_not_p_minimal():
    t_inf, p_minimal, c_tight = classify_periodic(EPSILON, 3, 6)
    assert t_inf == Fraction(18, 5)
    assert (p_minimal, c_tight) == (False, True)


def test_epsilon_divisors_are_p_minimal_and_c_tight():
    for n in range(3, 16):
        for d in range(1, n - 1):
            if (n - 1) % d == 0:
                assert classify_periodic(EPSILON, d, n)[1:] == (True, True)


def test_bcmw_exponent_examples():
    assert bcmw_exponent(2, 9, 2) == 5
    assert is_bcmw_power(2, 9, 2, 5)
    assert not is_bcmw_power(2, 9, 2, 4)
    for n in range(3, 20):
        assert bcmw_exponent(n, n - 1, n) == 1
    for p in range(-3, 7):
        assert bcmw_exponent(p, 1, 6) == 1


def test_bcmw_exponent_is_valid():
    for q in range(1, 14):
        for m in range(1, 14):
            for p in range(-20, 40):
                if math.gcd(p, q) == 1:
                    r = bcmw_exponent(p, q, m)
                    assert 1 <= r
                    assert is_bcmw_power(p, q, m, r)


def test_bcmw_exponent_with_composite_central_exponent():
    for m in (36, 60, 210, 1024, 2310):
        for q in (7, 9, 11, 13):
            for p in range(1, 40):
                if math.gcd(p, q) == 1:
                    r = bcmw_exponent(p, q, m)
                    assert 1 <= r < q * m
                    assert is_bcmw_power(p, q, m, r)


def test_epsilon_reduction_examples():
    assert epsilon_reduction(3, 13) == (3, 1, 0)
    assert epsilon_reduction(8, 13) == (4, 2, -1)
    assert epsilon_reduction(5, 11) == (5, 1, 0)
    with pytest.raises(BadParameters):
        epsilon_reduction(12, 13)
    for n in range(3, 15):
        for k in range(1, n - 1):
            d, r, s = epsilon_reduction(k, n)
            assert k * r + (n - 1) * s == d == math.gcd(k, n - 1)
            assert 0 < r < n - 1


@pytest.mark.parametrize("r", [1, 2, 7, 19, 1000])
def test_power_conjugacy_iterations(r):
    eps = epsilon(20)
    result = PeriodicSolver(SolverConfig(check_invariants=r <= 19)).power_conjugacy(eps, r)
    assert result.iterations == r.bit_length()
    assert result.h.canonical_length <= 1
    if r <= 100:
        assert apply(result.conjugator, result.h) == power(eps, r)


def test_power_conjugacy_reaches_central_power():
    result = PeriodicSolver().power_conjugacy(epsilon(13), 12)
    assert result.h == NormalForm.delta_power(13, 13)

    result = PeriodicSolver().power_conjugacy(NormalForm.delta_power(6, 1), 5)
    assert result.h == NormalForm.delta_power(6, 5)
    assert result.conjugator.normal_form() == NormalForm.identity(6)

    eps = epsilon(6)
    result = PeriodicSolver().power_conjugacy(eps, 5)
    assert apply(result.conjugator, result.h) == power(eps, 5)
    with pytest.raises(BadParameters):
        PeriodicSolver().power_conjugacy(eps, 0)


def test_decide_examples(b13_alpha, rng):
    solver = PeriodicSolver()
    verdict = solver.decide(b13_alpha)
    assert (verdict.kind, verdict.k) == (VerdictKind.EPSILON_TYPE, 3)

    assert solver.decide(nf(3, 0, [[2, 1]])).kind is VerdictKind.NON_PERIODIC

    alpha = apply(random_conjugator(7, 10, rng), NormalForm.delta_power(7, 4))
    summit, _ = to_super_summit(alpha)
    verdict = solver.decide(summit)
    assert (verdict.kind, verdict.k) == (VerdictKind.DELTA_TYPE, 4)
    assert apply(verdict.conjugator, summit) == NormalForm.delta_power(7, 4)


def test_b13_merge_trace(b13_alpha):
    trace = CycleMergeTrace()
    gamma = PeriodicSolver().merge_cycles(b13_alpha, 3, trace)
    rounds = [[str(c) for c in chain] for chain in trace.rounds]
    assert rounds == [["[13,10]", "[10,7]", "[7,4]"], ["[12,11]", "[9,8]", "[6,5]"]]
    assert trace.t == 4
    assert apply(gamma, b13_alpha) == NormalForm.epsilon_power(13, 3)


def test_b13_published_conjugator(b13_alpha):
    beta = Conjugator(
        13,
        BraidWord.of(13, DeltaPower(-3), Simple(cycles(13, [7, 4, 1], [6, 5], [3, 2]))),
    )
    assert SummitOracle().verify_conjugation(b13_alpha, beta, NormalForm.epsilon_power(13, 3))


def test_merge_cycles_on_simple_runs():
    for n, d in [(7, 1), (7, 2), (7, 3), (13, 4)]:
        trace = CycleMergeTrace()
        target = NormalForm.epsilon_power(n, d)
        gamma = PeriodicSolver().merge_cycles(target, d, trace)
        assert trace.t == 1 and trace.rounds == []
        assert gamma.normal_form() == NormalForm.identity(n)

    alpha = nf(7, 2, [[6, 5, 4]])
    trace = CycleMergeTrace()
    gamma = PeriodicSolver().merge_cycles(alpha, 2, trace)
    assert trace.t == 4
    assert gamma.normal_form() == NormalForm.delta_power(7, -3)
    assert apply(gamma, alpha) == NormalForm.epsilon_power(7, 2)


def test_merge_cycles_rejects_bad_input():
    solver = PeriodicSolver()
    with pytest.raises(BadParameters):
        solver.merge_cycles(NormalForm.epsilon_power(7, 4), 4)
    with pytest.raises(NotInSSS):
        solver.merge_cycles(nf(7, 2, [[5, 3, 1]]), 2)
    with pytest.raises(NotInSSS):
        solver.merge_cycles(NormalForm.epsilon_power(7, 3), 2)


def test_epsilon_search_examples(rng):
    solver = PeriodicSolver()
    eps7 = NormalForm.epsilon_power(13, 7)
    gamma = solver.epsilon_search(eps7, 7)
    assert apply(gamma, eps7) == eps7

    target = NormalForm.epsilon_power(13, 8)
    alpha, _ = to_super_summit(apply(random_conjugator(13, 10, rng), target))
    assert apply(solver.epsilon_search(alpha, 8), alpha) == target

    # k = 12 + 2: the central delta^13 is stripped first
    target = NormalForm.epsilon_power(13, 14)
    alpha, _ = to_super_summit(apply(random_conjugator(13, 6, rng), target))
    assert apply(solver.epsilon_search(alpha, 14), alpha) == target


def test_solve_b13_example(b13_alpha):
    verdict = PeriodicSolver().solve(b13_alpha)
    assert verdict.kind is VerdictKind.EPSILON_TYPE
    assert verdict.k == 3
    assert verdict.verified is True
    assert apply(verdict.conjugator, b13_alpha) == NormalForm.epsilon_power(13, 3)


def test_solve_reducible_braid_is_not_periodic():
    alpha = nf(6, 3, [[3, 2, 1]])
    assert power(alpha, 5).factors and power(alpha, 6).factors
    verdict = PeriodicSolver().solve(alpha)
    assert verdict.kind is VerdictKind.NON_PERIODIC
    assert not verdict.is_periodic


def test_solve_without_verification():
    verdict = PeriodicSolver(SolverConfig(verify=False)).solve(NormalForm.delta_power(5, 2))
    assert verdict.kind is VerdictKind.DELTA_TYPE
    assert verdict.verified is None


def _expected(n, kind, k):
    if kind == EPSILON and k % (n - 1) == 0:
        return VerdictKind.DELTA_TYPE, n * k // (n - 1)
    return (VerdictKind.EPSILON_TYPE if kind == EPSILON else VerdictKind.DELTA_TYPE), k


def test_solve_round_trips(rng):
    solver = PeriodicSolver()
    for _ in range(60):
        n = rng.randint(3, 12)
        kind = rng.choice([DELTA, EPSILON])
        k = rng.randint(-3 * (n - 1), 3 * (n - 1))
        target = NormalForm.epsilon_power(n, k) if kind == EPSILON else NormalForm.delta_power(n, k)
        alpha = apply(random_conjugator(n, rng.randint(0, 12), rng), target)
        verdict = solver.solve(alpha)
        assert (verdict.kind, verdict.k) == _expected(n, kind, k)
        assert verdict.verified is True
        assert apply(verdict.conjugator, alpha) == verdict.target(n)


@pytest.mark.slow
def test_solve_round_trips_at_full_scale():
    rng = random.Random(1000)
    solver = PeriodicSolver()
    elapsed = 0.0
    for _ in range(1000):
        n = rng.randint(3, 30)
        kind = rng.choice([DELTA, EPSILON])
        k = rng.randint(-3 * (n - 1), 3 * (n - 1))
        target = NormalForm.epsilon_power(n, k) if kind == EPSILON else NormalForm.delta_power(n, k)
        alpha = apply(random_conjugator(n, rng.randint(0, 50), rng), target)
        start = time.perf_counter()
        verdict = solver.solve(alpha)
        elapsed += time.perf_counter() - start
        assert (verdict.kind, verdict.k) == _expected(n, kind, k)
        assert verdict.verified is True
    assert elapsed < 60


def test_solve_b13_random_conjugates(rng):
    target = NormalForm.epsilon_power(13, 3)
    for _ in range(5):
        alpha = apply(random_conjugator(13, 20, rng), target)
        verdict = PeriodicSolver().solve(alpha)
        assert (verdict.kind, verdict.k) == (VerdictKind.EPSILON_TYPE, 3)
        assert verdict.verified is True


def test_bcmw_power_preserves_centralizer():
    # epsilon^3 in B_5: t_inf = 15/4, so r = 3
    n, v = 5, 3
    t_inf = t_inf_periodic(EPSILON, v, n)
    r = bcmw_exponent(t_inf.numerator, t_inf.denominator, n)
    assert r == 3
    g = NormalForm.epsilon_power(n, v)
    g_r = power(g, r)
    for s in SummitOracle().enumerate_simples(n):
        x = Conjugator.from_simple(s)
        assert (apply(x, g) == g) == (apply(x, g_r) == g_r)


@pytest.mark.parametrize("n, v", [(5, 3), (6, 3), (9, 3)])
def test_bcmw_power_transfers_conjugators(n, v, rng):
    t_inf = t_inf_periodic(EPSILON, v, n)
    r = bcmw_exponent(t_inf.numerator, t_inf.denominator, n)
    assert r > 1
    g = NormalForm.epsilon_power(n, v)
    eps = Conjugator(n, epsilon(n).to_word())
    for _ in range(8):
        y = random_conjugator(n, rng.randint(3, 10), rng)
        h = apply(y, g)
        h_r = power(h, r)
        candidates = [
            y,
            compose(eps, y),
            compose(Conjugator.from_delta(n, 1), y),
            random_conjugator(n, rng.randint(3, 10), rng),
        ]
        for x in candidates:
            assert (apply(x, g) == h) == (apply(x, power(g, r)) == h_r)
        assert apply(y, power(g, r)) == h_r
        assert apply(compose(eps, y), g) == h


def test_solve_runtime_is_polynomial(rng):
    sizes = [10, 20, 40, 80]
    timings = []
    solver = PeriodicSolver(SolverConfig(verify=False))
    for n in sizes:
        alpha = apply(random_conjugator(n, 6, rng), NormalForm.epsilon_power(n, 3))
        best = math.inf
        for _ in range(2):
            start = time.perf_counter()
            verdict = solver.solve(alpha)
            best = min(best, time.perf_counter() - start)
        assert (verdict.kind, verdict.k) == (VerdictKind.EPSILON_TYPE, 3)
        timings.append(best)
    slope = np.polyfit(np.log(sizes), np.log(timings), 1)[0]
    assert slope < 3


def test_identity_conjugator_for_delta():
    verdict = PeriodicSolver().solve(NormalForm.delta_power(6, 1))
    assert (verdict.kind, verdict.k) == (VerdictKind.DELTA_TYPE, 1)
    assert verdict.conjugator.normal_form() == NormalForm.identity(6)
