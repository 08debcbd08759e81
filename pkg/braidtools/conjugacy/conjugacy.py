# BKL Braid Workshop - Conjugacy Tools
# Cycling, decycling, partial cycling and super summit reduction
"""
Conjugacy Module

Every operation here returns its result together with the conjugator that
produced it. A Conjugator x acts on a braid g by g -> x^-1 g x, and
compose(x, y) is the word x y, so applying it means applying x and then y.

Conjugators are kept as unreduced words and only normalized when applied.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Tuple

from ..braidword import (
    BraidWord,
    DeltaPower,
    NormalForm,
    Simple,
    SimpleInverse,
    normalize,
)
from ..errors import InternalInconsistency, NotAPrefix, validate_same_strands
from ..ncp import RIGHT, SimpleElement, complement_in, is_left_divisor, tau_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Conjugator:
    """A braid word x recording the conjugation g -> x^-1 g x."""

    n: int
    word: BraidWord

    @classmethod
    def identity(cls, n: int) -> "Conjugator":
        return cls(n, BraidWord(n))

    @classmethod
    def from_simple(cls, a: SimpleElement) -> "Conjugator":
        return cls(a.n, BraidWord.of(a.n, Simple(a)))

    @classmethod
    def from_simple_inverse(cls, a: SimpleElement) -> "Conjugator":
        return cls(a.n, BraidWord.of(a.n, SimpleInverse(a)))

    @classmethod
    def from_delta(cls, n: int, u: int) -> "Conjugator":
        return cls(n, BraidWord.of(n, DeltaPower(u)))

    @property
    def is_empty(self) -> bool:
        return not self.word.syllables

    def normal_form(self) -> NormalForm:
        return normalize(self.word)

    def __str__(self) -> str:
        tokens = []
        for s in self.word.syllables:
            if isinstance(s, DeltaPower):
                tokens.append("d" if s.u == 1 else f"d^{s.u}")
            elif isinstance(s, Simple):
                tokens.append(str(s.a))
            else:
                tokens.append(f"{s.a}^-1")
        return " ".join(tokens) if tokens else "e"


def apply(x: Conjugator, g: NormalForm) -> NormalForm:
    """Normal form of x^-1 g x."""
    validate_same_strands(x.n, g.n)
    if x.is_empty:
        return g
    word = x.word.inverse() + g.to_word() + x.word
    return normalize(word)


def compose(x: Conjugator, y: Conjugator) -> Conjugator:
    """The conjugator that applies x first and then y."""
    validate_same_strands(x.n, y.n)
    return Conjugator(x.n, x.word + y.word)


def invert(x: Conjugator) -> Conjugator:
    return Conjugator(x.n, x.word.inverse())


def cycling(g: NormalForm) -> Tuple[NormalForm, Conjugator]:
    """
    Cycling c(g) = delta^u a_2 ... a_l tau^-u(a_1).

    Returns:
        (c(g), x) with x = tau^-u(a_1) and x^-1 g x = c(g); (g, e) when l = 0
    """
    if not g.factors:
        return g, Conjugator.identity(g.n)
    moved = tau_power(g.factors[0], -g.inf)
    word = BraidWord(
        g.n,
        (DeltaPower(g.inf),) + tuple(Simple(a) for a in g.factors[1:]) + (Simple(moved),),
    )
    return normalize(word), Conjugator.from_simple(moved)


def decycling(g: NormalForm) -> Tuple[NormalForm, Conjugator]:
    """
    Decycling d(g) = delta^u tau^u(a_l) a_1 ... a_(l-1).

    Returns:
        (d(g), x) with x = a_l^-1, so x^-1 g x = a_l g a_l^-1 = d(g)
    """
    if not g.factors:
        return g, Conjugator.identity(g.n)
    last = g.factors[-1]
    word = BraidWord(
        g.n,
        (DeltaPower(g.inf), Simple(tau_power(last, g.inf)))
        + tuple(Simple(a) for a in g.factors[:-1]),
    )
    return normalize(word), Conjugator.from_simple_inverse(last)


def partial_cycling(g: NormalForm, b: SimpleElement) -> Tuple[NormalForm, Conjugator]:
    """
    Partial cycling of g by a left divisor b of its first factor.

    With g = delta^u a_1 ... a_l and a_1 = b a_1', the result is the normal
    form of delta^u a_1' a_2 ... a_l tau^-u(b), reached by the conjugator
    tau^-u(b).

    Raises:
        NotAPrefix: If b is not a left divisor of a_1
        InternalInconsistency: If the infimum went down
    """
    validate_same_strands(g.n, b.n)
    if b.is_identity:
        return g, Conjugator.identity(g.n)
    if not g.factors or not is_left_divisor(b, g.factors[0]):
        first = g.factors[0] if g.factors else "e"
        raise NotAPrefix(f"{b} is not a left divisor of the first factor {first}")

    moved = tau_power(b, -g.inf)
    remainder = complement_in(b, g.factors[0], RIGHT)
    word = BraidWord(
        g.n,
        (DeltaPower(g.inf), Simple(remainder))
        + tuple(Simple(a) for a in g.factors[1:])
        + (Simple(moved),),
    )
    result = normalize(word)
    if result.inf < g.inf:
        raise InternalInconsistency(f"partial cycling of {g} by {b} lowered inf to {result.inf}")
    return result, Conjugator.from_simple(moved)


def to_super_summit(g: NormalForm) -> Tuple[NormalForm, Conjugator]:
    """
    Reach the super summit set of g by iterated cycling and decycling.

    Cycling stops once n - 1 consecutive cyclings fail to raise inf;
    decycling then stops once n - 1 consecutive decyclings fail to lower sup.

    Args:
        g: Any braid in normal form

    Returns:
        (h, x) with h in the super summit set of g and x^-1 g x = h
    """
    window = max(g.n - 1, 1)
    best, best_conj = g, Conjugator.identity(g.n)

    current, conj = best, best_conj
    stagnant = 0
    while current.factors and stagnant < window:
        current, step = cycling(current)
        conj = compose(conj, step)
        if current.inf > best.inf:
            best, best_conj, stagnant = current, conj, 0
            logger.debug("cycling raised inf to %d", best.inf)
        else:
            stagnant += 1

    current, conj = best, best_conj
    stagnant = 0
    while current.factors and stagnant < window:
        current, step = decycling(current)
        conj = compose(conj, step)
        if current.sup < best.sup:
            best, best_conj, stagnant = current, conj, 0
            logger.debug("decycling lowered sup to %d", best.sup)
        else:
            stagnant += 1

    return best, best_conj
