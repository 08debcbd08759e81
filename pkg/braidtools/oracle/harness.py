# BKL Braid Workshop - Property Harness
"""
Randomized property suites for the braid tools.

Each suite returns a dict with name, checked, failures and ok, ready for
JSON output. Randomness comes only from the rng passed in.
"""
from __future__ import annotations

import logging
import random
from typing import Dict, List

import numpy as np

from ..braidword import (
    BraidWord,
    DeltaPower,
    NormalForm,
    Simple,
    SimpleInverse,
    exponent_sum,
    normalize,
    permutation_of,
)
from ..conjugacy import Conjugator, apply
from ..errors import MAX_SSS_STRANDS, validate_strands
from ..ncp import (
    LEFT,
    RIGHT,
    SimpleElement,
    band_generator,
    complement_delta,
    is_left_divisor,
    join_left,
    meet_left,
    tau_power,
)
from .oracle import SummitOracle

logger = logging.getLogger(__name__)


def random_simple(n: int, rng: random.Random) -> SimpleElement:
    """A simple element built as the join of a few random band generators."""
    a = SimpleElement.identity(n)
    for _ in range(rng.randint(0, max(n // 2, 1))):
        t, s = rng.sample(range(1, n + 1), 2)
        a = join_left(a, band_generator(n, t, s))
    return a


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    syllables = []
    for _ in range(length):
        roll = rng.random()
        if roll < 0.2:
            syllables.append(DeltaPower(rng.randint(-2, 2)))
        elif roll < 0.6:
            syllables.append(Simple(random_simple(n, rng)))
        else:
            syllables.append(SimpleInverse(random_simple(n, rng)))
    return BraidWord(n, tuple(syllables))


def _suite(name: str, checked: int, failures: int) -> Dict:
    return {"name": name, "checked": checked, "failures": failures, "ok": failures == 0}


def check_complements(n: int, rng: random.Random, samples: int) -> Dict:
    delta = NormalForm.delta_power(n, 1)
    failures = 0
    for _ in range(samples):
        a = random_simple(n, rng)
        right = complement_delta(a, RIGHT)
        left = complement_delta(a, LEFT)
        if normalize(BraidWord.of(n, Simple(a), Simple(right))) != delta:
            failures += 1
        elif normalize(BraidWord.of(n, Simple(left), Simple(a))) != delta:
            failures += 1
        elif complement_delta(right, RIGHT) != tau_power(a, 1):
            failures += 1
    return _suite("complements", samples, failures)


def check_lattice(n: int, rng: random.Random, samples: int) -> Dict:
    failures = 0
    for _ in range(samples):
        a, b = random_simple(n, rng), random_simple(n, rng)
        m, j = meet_left(a, b), join_left(a, b)
        ok = (
            is_left_divisor(m, a)
            and is_left_divisor(m, b)
            and is_left_divisor(a, j)
            and is_left_divisor(b, j)
            and meet_left(a, j) == a
            and join_left(a, m) == a
            and m == meet_left(b, a)
            and j == join_left(b, a)
        )
        failures += not ok
    return _suite("lattice", samples, failures)


def check_normal_forms(n: int, rng: random.Random, samples: int) -> Dict:
    failures = 0
    for _ in range(samples):
        w = random_word(n, rng.randint(0, 8), rng)
        g = normalize(w)
        ok = (
            g.is_left_weighted()
            and np.array_equal(permutation_of(g), w.permutation())
            and exponent_sum(g) == w.exponent_sum()
            and normalize(w + w.inverse()) == NormalForm.identity(n)
            and normalize(g.to_word()) == g
        )
        failures += not ok
    return _suite("normal-forms", samples, failures)


def check_delta_conjugation(n: int, rng: random.Random, samples: int) -> Dict:
    failures = 0
    for _ in range(samples):
        g = normalize(random_word(n, rng.randint(0, 6), rng))
        failures += apply(Conjugator.from_delta(n, 1), g) != g.tau(1)
    return _suite("delta-conjugation", samples, failures)


def run_property_suites(n: int, rng: random.Random, samples: int = 200) -> List[Dict]:
    """
    Run every randomized suite, then the exhaustive summit-set suites for
    each proper divisor d of n - 1 when n is small enough.
    """
    validate_strands(n, 3)
    results = [
        check_complements(n, rng, samples),
        check_lattice(n, rng, samples),
        check_normal_forms(n, rng, samples),
        check_delta_conjugation(n, rng, samples),
    ]
    if n > MAX_SSS_STRANDS:
        logger.info("skipping summit-set suites for n=%d", n)
        return results

    oracle = SummitOracle()
    for d in range(1, n - 1):
        if (n - 1) % d:
            continue
        table = oracle.brute_sss_epsilon(n, d)
        closure = oracle.check_partial_cycling_closure(table)
        results.append(_suite(f"closure d={d}", closure.checked, len(closure.violations)))
        for report in (oracle.check_twisted_product(table), oracle.check_tau_stability(table)):
            results.append(_suite(f"{report.name} d={d}", report.checked, len(report.failures)))
    return results
