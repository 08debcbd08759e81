# BKL Braid Workshop - Braid Words and Normal Forms
# Group arithmetic on words in the simple elements
"""
Braid Word Module

A braid is entered as a word in the simple elements, interleaved with powers
of delta, and reduced to its left normal form

    delta^u a_1 ... a_l,   every a_i in D \\ {e, delta},  (a_i, a_(i+1)) left-weighted.

The normal form is unique, so equality of braids is equality of normal forms.
inf = u, sup = u + l and the canonical length is l.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Tuple, Union

import numpy as np

from ..errors import InternalInconsistency, check_int64, validate_same_strands
from ..ncp import (
    LEFT,
    SimpleElement,
    atom_length,
    complement_delta,
    is_left_weighted,
    left_weight_pair,
    simple_from_cycles,
    tau_power,
)
from ..ncp.ncp import rotation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DeltaPower:
    u: int


@dataclass(frozen=True)
class Simple:
    a: SimpleElement


@dataclass(frozen=True)
class SimpleInverse:
    a: SimpleElement


Syllable = Union[DeltaPower, Simple, SimpleInverse]


@dataclass(frozen=True)
class BraidWord:
    """
    A word W = delta^u0 a_1^k1 delta^u1 ... in the simple elements.

    Identity syllables and zero delta-powers are dropped on construction.
    """

    n: int
    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        kept = []
        for s in self.syllables:
            if isinstance(s, DeltaPower):
                check_int64(s.u)
                if s.u != 0:
                    kept.append(s)
            elif isinstance(s, (Simple, SimpleInverse)):
                validate_same_strands(self.n, s.a.n)
                if not s.a.is_identity:
                    kept.append(s)
            else:
                raise TypeError(f"not a syllable: {s!r}")
        object.__setattr__(self, "syllables", tuple(kept))

    @classmethod
    def of(cls, n: int, *syllables: Syllable) -> "BraidWord":
        return cls(n, tuple(syllables))

    @property
    def simple_length(self) -> int:
        """|W|_simple: the number of syllables that are not delta-powers."""
        return sum(1 for s in self.syllables if not isinstance(s, DeltaPower))

    def __add__(self, other: "BraidWord") -> "BraidWord":
        validate_same_strands(self.n, other.n)
        return BraidWord(self.n, self.syllables + other.syllables)

    def inverse(self) -> "BraidWord":
        flipped: List[Syllable] = []
        for s in reversed(self.syllables):
            if isinstance(s, DeltaPower):
                flipped.append(DeltaPower(-s.u))
            elif isinstance(s, Simple):
                flipped.append(SimpleInverse(s.a))
            else:
                flipped.append(Simple(s.a))
        return BraidWord(self.n, tuple(flipped))

    def permutation(self) -> np.ndarray:
        """Induced permutation of the word, read syllable by syllable."""
        perm = np.arange(self.n)
        for s in self.syllables:
            if isinstance(s, DeltaPower):
                perm = np.asarray(rotation(self.n, s.u))[perm]
            elif isinstance(s, Simple):
                perm = np.asarray(s.a.image)[perm]
            else:
                perm = np.asarray(s.a.inverse_image)[perm]
        return perm + 1

    def exponent_sum(self) -> int:
        total = 0
        for s in self.syllables:
            if isinstance(s, DeltaPower):
                total += s.u * (self.n - 1)
            elif isinstance(s, Simple):
                total += atom_length(s.a)
            else:
                total -= atom_length(s.a)
        return check_int64(total, "exponent sum")


@dataclass(frozen=True)
class NormalForm:
    """
    Left normal form delta^inf a_1 ... a_l.

    Attributes:
        n: Strand count
        inf: Power of delta in front
        factors: Canonical factors, each a proper non-trivial simple element
    """

    n: int
    inf: int = 0
    factors: Tuple[SimpleElement, ...] = ()

    @classmethod
    def identity(cls, n: int) -> "NormalForm":
        return cls(n)

    @classmethod
    def delta_power(cls, n: int, u: int) -> "NormalForm":
        return cls(n, check_int64(u))

    @classmethod
    def from_simple(cls, a: SimpleElement) -> "NormalForm":
        return normalize(BraidWord.of(a.n, Simple(a)))

    @classmethod
    def epsilon_power(cls, n: int, k: int) -> "NormalForm":
        """epsilon^k where epsilon = delta [2,1] = delta sigma_1."""
        epsilon = normalize(BraidWord.of(n, DeltaPower(1), Simple(simple_from_cycles(n, [[2, 1]]))))
        # epsilon^(n-1) = delta^n is central
        u, v = divmod(k, n - 1)
        base = power(epsilon, v)
        return NormalForm(n, check_int64(base.inf + n * u), base.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def tau(self, u: int = 1) -> "NormalForm":
        """delta^-u g delta^u."""
        return NormalForm(self.n, self.inf, tuple(tau_power(a, u) for a in self.factors))

    def with_inf(self, inf: int) -> "NormalForm":
        """Multiply by a power of delta that is a multiple of n (central)."""
        if (inf - self.inf) % self.n:
            raise InternalInconsistency(f"shift {inf - self.inf} is not central in B_{self.n}")
        return NormalForm(self.n, check_int64(inf), self.factors)

    def to_word(self) -> BraidWord:
        return BraidWord(self.n, (DeltaPower(self.inf),) + tuple(Simple(a) for a in self.factors))

    def is_left_weighted(self) -> bool:
        """Check every normal-form invariant of the stored factors."""
        if any(a.is_identity or a.is_delta for a in self.factors):
            return False
        return all(is_left_weighted(a, b) for a, b in zip(self.factors, self.factors[1:]))

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        return mul(self, other)

    def __pow__(self, k: int) -> "NormalForm":
        return power(self, k)

    def __str__(self) -> str:
        parts = []
        if self.inf == 1:
            parts.append("d")
        elif self.inf != 0:
            parts.append(f"d^{self.inf}")
        body = " . ".join(str(a) for a in self.factors)
        if body:
            parts.append(body)
        return " ".join(parts) if parts else "e"


class _Accumulator:
    """Running normal form that is multiplied on the right."""

    def __init__(self, n: int, inf: int = 0, factors: Iterable[SimpleElement] = ()):
        self.n = n
        self.inf = inf
        self.factors: List[SimpleElement] = list(factors)

    def times_delta(self, k: int) -> None:
        # x delta^k = delta^k tau^k(x)
        self.inf = check_int64(self.inf + k)
        if k % self.n:
            self.factors = [tau_power(a, k) for a in self.factors]

    def times_simple(self, a: SimpleElement) -> None:
        if a.is_identity:
            return
        if a.is_delta:
            self.times_delta(1)
            return
        factors = self.factors
        factors.append(a)
        j = len(factors) - 2
        while j >= 0:
            x, y = left_weight_pair(factors[j], factors[j + 1])
            if x == factors[j]:
                break
            factors[j], factors[j + 1] = x, y
            j -= 1
        self._strip()

    def times_inverse(self, a: SimpleElement) -> None:
        # a^-1 = delta^-1 (*a)
        if a.is_identity:
            return
        self.times_delta(-1)
        self.times_simple(complement_delta(a, LEFT))

    def settle(self) -> None:
        """Left-weight adjacent pairs until nothing moves."""
        changed = True
        while changed:
            changed = False
            factors = self.factors
            for j in range(len(factors) - 1):
                x, y = left_weight_pair(factors[j], factors[j + 1])
                if x != factors[j]:
                    factors[j], factors[j + 1] = x, y
                    changed = True
            self._strip()

    def _strip(self) -> None:
        factors = self.factors
        lead = 0
        while lead < len(factors) and factors[lead].is_delta:
            lead += 1
        if lead:
            self.inf = check_int64(self.inf + lead)
            del factors[:lead]
        self.factors = [a for a in factors if not a.is_identity]

    def result(self) -> NormalForm:
        self.settle()
        return NormalForm(self.n, self.inf, tuple(self.factors))


def _feed(acc: _Accumulator, syllables: Iterable[Syllable]) -> None:
    for s in syllables:
        if isinstance(s, DeltaPower):
            acc.times_delta(s.u)
        elif isinstance(s, Simple):
            acc.times_simple(s.a)
        else:
            acc.times_inverse(s.a)


def normalize(w: BraidWord) -> NormalForm:
    """
    Left normal form of the braid represented by a word.

    Inverse syllables are rewritten as delta^-1 (*a), delta-powers are pushed
    left through tau, and factors are left-weighted as they arrive.
    """
    acc = _Accumulator(w.n)
    _feed(acc, w.syllables)
    return acc.result()


def mul(x: NormalForm, y: NormalForm) -> NormalForm:
    """Normal form of x y."""
    validate_same_strands(x.n, y.n)
    if not y.factors:
        return NormalForm(x.n, check_int64(x.inf + y.inf), tuple(tau_power(a, y.inf) for a in x.factors))
    acc = _Accumulator(x.n, x.inf, x.factors)
    acc.times_delta(y.inf)
    for a in y.factors:
        acc.times_simple(a)
    return acc.result()


def inverse(x: NormalForm) -> NormalForm:
    """Normal form of x^-1."""
    return normalize(x.to_word().inverse())


def power(x: NormalForm, k: int) -> NormalForm:
    """
    Normal form of x^k by square-and-multiply.

    Raises:
        ExponentOverflow: If k or the resulting infimum leaves 64 bits
    """
    check_int64(k)
    if k < 0:
        return power(inverse(x), -k)
    if not x.factors:
        return NormalForm(x.n, check_int64(x.inf * k))
    result = NormalForm.identity(x.n)
    base = x
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def exponent_sum(x: NormalForm) -> int:
    """u(n-1) plus the band-generator length of every factor."""
    total = x.inf * (x.n - 1) + sum(atom_length(a) for a in x.factors)
    return check_int64(total, "exponent sum")


def permutation_of(x: NormalForm) -> np.ndarray:
    """
    Induced permutation, acting from the right.

    Returns:
        Array p of length n with p[k - 1] the image of strand k (1-based)
    """
    perm = np.asarray(rotation(x.n, x.inf))
    for a in x.factors:
        perm = np.asarray(a.image)[perm]
    return perm + 1


def concat(*words: BraidWord) -> BraidWord:
    n = validate_same_strands(*(w.n for w in words))
    return BraidWord(n, tuple(s for w in words for s in w.syllables))


