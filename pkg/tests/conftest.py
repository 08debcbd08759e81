"""
Shared helpers for the braid tool tests.
"""

import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from braidtools.braidword import BraidWord, DeltaPower, NormalForm, Simple, SimpleInverse, normalize  # noqa: E402
from braidtools.conjugacy import Conjugator  # noqa: E402
from braidtools.ncp import SimpleElement, band_generator, join_left, simple_from_cycles  # noqa: E402
from braidtools.oracle import random_word  # noqa: E402


def cycles(n, *blocks):
    """Simple element from descending cycles, e.g. cycles(6, [4, 3], [5, 2, 1])."""
    return simple_from_cycles(n, list(blocks))


def nf(n, inf, *factors):
    """Normal form from an infimum and factors given as lists of cycles."""
    return NormalForm(n, inf, tuple(simple_from_cycles(n, f) for f in factors))


def epsilon(n):
    return normalize(BraidWord.of(n, DeltaPower(1), Simple(cycles(n, [2, 1]))))


def random_conjugator(n, length, rng):
    return Conjugator(n, random_word(n, length, rng))


@st.composite
def simple_elements(draw, n=None, max_n=12):
    """A simple element built by joining random band generators."""
    if n is None:
        n = draw(st.integers(min_value=2, max_value=max_n))
    a = SimpleElement.identity(n)
    pairs = draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=n))
    for t, s in pairs:
        if t != s:
            a = join_left(a, band_generator(n, t, s))
    return a


@st.composite
def braid_words(draw, n=None, max_n=12, max_length=12):
    if n is None:
        n = draw(st.integers(min_value=2, max_value=max_n))
    syllables = []
    for _ in range(draw(st.integers(0, max_length))):
        kind = draw(st.sampled_from(["delta", "simple", "inverse"]))
        if kind == "delta":
            syllables.append(DeltaPower(draw(st.integers(-3, 3))))
        elif kind == "simple":
            syllables.append(Simple(draw(simple_elements(n=n))))
        else:
            syllables.append(SimpleInverse(draw(simple_elements(n=n))))
    return BraidWord(n, tuple(syllables))


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def b13_alpha():
    """delta^3 [13,10][12,11][6,4] in B_13, conjugate to epsilon^3."""
    return nf(13, 3, [[13, 10], [12, 11], [6, 4]])


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-scale randomized and exhaustive checks (deselect with -m 'not slow')")
