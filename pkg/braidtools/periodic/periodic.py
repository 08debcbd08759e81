# BKL Braid Workshop - Periodic Braid Solver
# Conjugacy decision and search for periodic braids
"""
Periodic Braid Module

A braid is periodic when some power of it is central, i.e. a power of
delta^n. Every periodic n-braid is conjugate to a power of delta or to a
power of epsilon = delta [2,1]. This module decides which, and finds an
explicit conjugator, in time polynomial in n and in the input length.

The arithmetic half works with t_inf = p/q, the limit of inf(g^k)/k, which
for a periodic braid pins down the conjugacy class:

    p = 1 mod q   the element is P-minimal
    p = 0 mod m   the element is C-tight (delta^m is the smallest central delta-power)

The solver half is built from five algorithms:

    power_conjugacy (I)   square-and-multiply that keeps every intermediate
                          power inside its super summit set
    decide (II)           periodicity test and delta-type search
    merge_cycles (III)    search for epsilon^d with d a proper divisor of n-1
    epsilon_search (IV)   search for any epsilon^k, reduced to (III)
    solve (V)             full decision plus search, with verification
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from sympy import primefactors

from ..braidword import NormalForm, mul
from ..conjugacy import Conjugator, apply, compose, invert, partial_cycling, to_super_summit
from ..errors import (
    BadParameters,
    InternalInconsistency,
    NotAPrefix,
    NotInSSS,
    NotPeriodic,
    NotReduced,
)
from ..ncp import DescendingCycle, cycles_of, tau_cycle

logger = logging.getLogger(__name__)

Rational = Fraction

DELTA = "delta"
EPSILON = "epsilon"

BKL = "bkl"
ARTIN = "artin"


class VerdictKind(Enum):
    NON_PERIODIC = "non-periodic"
    DELTA_TYPE = "delta-type"
    EPSILON_TYPE = "epsilon-type"


@dataclass
class PeriodicVerdict:
    """
    Outcome of the conjugacy decision problem for one braid.

    Attributes:
        kind: Which class the braid falls in
        k: Exponent of delta or epsilon (None when non-periodic)
        conjugator: gamma with gamma^-1 alpha gamma equal to the target
        verified: Result of the conjugation check, None if it was skipped
    """

    kind: VerdictKind
    k: Optional[int] = None
    conjugator: Optional[Conjugator] = None
    verified: Optional[bool] = None

    @property
    def is_periodic(self) -> bool:
        return self.kind is not VerdictKind.NON_PERIODIC

    def target(self, n: int) -> Optional[NormalForm]:
        """delta^k or epsilon^k as a normal form."""
        if self.kind is VerdictKind.DELTA_TYPE:
            return NormalForm.delta_power(n, self.k)
        if self.kind is VerdictKind.EPSILON_TYPE:
            return NormalForm.epsilon_power(n, self.k)
        return None


@dataclass
class SolverConfig:
    """
    Settings for PeriodicSolver.

    Attributes:
        verify: Check every returned conjugator by exact normal-form equality
        check_invariants: Assert the commuting-pair and left-weighted
            invariants inside the power conjugacy loop
    """

    verify: bool = True
    check_invariants: bool = False


@dataclass
class PowerConjugacyResult:
    """h in the super summit set of g^r, with conjugator^-1 h conjugator = g^r."""

    h: NormalForm
    conjugator: Conjugator
    iterations: int


@dataclass
class CycleMergeTrace:
    """
    Record of merge_cycles: each round lists the moving cycle's successive
    positions, the last one being where it merged; t is the pure strand.
    """

    rounds: List[List[DescendingCycle]] = field(default_factory=list)
    t: Optional[int] = None


def central_exponent(n: int, structure: str = BKL) -> int:
    """Smallest m with Delta^m central: n for delta in BKL, 2 for Artin's Delta."""
    if structure == BKL:
        return n
    if structure == ARTIN:
        return 2
    raise BadParameters(f"unknown Garside structure {structure!r}")


def t_inf_periodic(kind: str, k: int, n: int, structure: str = BKL) -> Fraction:
    """
    t_inf of delta^k or epsilon^k in B_n.

    Under BKL, delta^k has t_inf k and epsilon^k has nk/(n-1). Under the
    Artin structure, where Delta^2 = delta^n = epsilon^(n-1), the values are
    2k/n and 2k/(n-1).
    """
    if n < 3:
        raise BadParameters(f"need n >= 3, got {n}")
    if structure == BKL:
        if kind == DELTA:
            return Fraction(k)
        if kind == EPSILON:
            return Fraction(n * k, n - 1)
    elif structure == ARTIN:
        if kind == DELTA:
            return Fraction(2 * k, n)
        if kind == EPSILON:
            return Fraction(2 * k, n - 1)
    else:
        raise BadParameters(f"unknown Garside structure {structure!r}")
    raise BadParameters(f"kind must be 'delta' or 'epsilon', got {kind!r}")


def classify_pc(p: int, q: int, m: int) -> Tuple[bool, bool]:
    """
    Classify t_inf = p/q.

    Returns:
        (p_minimal, c_tight): p = 1 mod q and p = 0 mod m

    Raises:
        NotReduced: If gcd(p, q) != 1
    """
    if q < 1 or m < 1:
        raise BadParameters(f"q and m must be positive, got q={q}, m={m}")
    if gcd(p, q) != 1:
        raise NotReduced(f"{p}/{q} is not in lowest terms")
    return p % q == 1 % q, p % m == 0


def classify_periodic(kind: str, k: int, n: int, structure: str = BKL) -> Tuple[Fraction, bool, bool]:
    """t_inf of delta^k or epsilon^k together with its P-minimal and C-tight flags."""
    t_inf = t_inf_periodic(kind, k, n, structure)
    p_minimal, c_tight = classify_pc(t_inf.numerator, t_inf.denominator, central_exponent(n, structure))
    return t_inf, p_minimal, c_tight


def bcmw_exponent(p: int, q: int, m: int) -> int:
    """
    Exponent r making g^r P-minimal with the same central-quotient subgroup.

    r satisfies p r = 1 mod q and gcd(r, m / gcd(p, m)) = 1. It is built by
    the Chinese remainder theorem from r = p^-1 mod q and r = 1 modulo every
    prime of m / gcd(p, m) that does not divide q.

    Returns:
        r with 1 <= r < q m; 1 when q = 1
    """
    if q < 1 or m < 1:
        raise BadParameters(f"q and m must be positive, got q={q}, m={m}")
    if gcd(p, q) != 1:
        raise NotReduced(f"{p}/{q} is not in lowest terms")
    if q == 1:
        return 1
    r = pow(p, -1, q)
    step = q
    for prime in primefactors(m // gcd(p, m)):
        if q % prime == 0:
            continue
        while r % prime != 1:
            r += step
        step *= prime
    return r


def is_bcmw_power(p: int, q: int, m: int, r: int) -> bool:
    return (p * r) % q == 1 % q and gcd(r, m // gcd(p, m)) == 1


def epsilon_reduction(k: int, n: int) -> Tuple[int, int, int]:
    """
    Reduce epsilon^k to a C-tight BCMW power.

    Returns:
        (d, r, s) with d = gcd(k, n-1), k r + (n-1) s = d and 0 < r < n-1

    Raises:
        BadParameters: If k is a multiple of n - 1
    """
    if n < 3 or k % (n - 1) == 0:
        raise BadParameters(f"epsilon^{k} in B_{n} is central or trivial; nothing to reduce")
    d = gcd(k, n - 1)
    q = (n - 1) // d
    r = pow(k // d, -1, q)
    s = (d - k * r) // (n - 1)
    return d, r, s


class PeriodicSolver:
    """
    Conjugacy decision and search for periodic braids.

    Attributes:
        config: SolverConfig controlling verification and invariant checks
    """

    def __init__(self, config: Optional[SolverConfig] = None):
        self.config = config or SolverConfig()

    def power_conjugacy(self, g: NormalForm, r: int) -> PowerConjugacyResult:
        """
        Power a periodic super summit element, staying in summit sets.

        Walks the binary expansion of r from the top bit. Each step squares
        the running power h, multiplies in the running copy of g when the
        bit is set, and pulls the product back into its super summit set;
        the copy of g is conjugated along so the two always commute.

        Args:
            g: Super summit element with canonical length at most 1
            r: Positive exponent

        Returns:
            PowerConjugacyResult with conjugator^-1 h conjugator = g^r and
            iterations = floor(log2 r) + 1

        Raises:
            BadParameters: If r < 1
            NotPeriodic: If an intermediate summit element is longer than 1
        """
        if r < 1:
            raise BadParameters(f"exponent must be positive, got {r}")
        n = g.n
        tracker = g
        h = NormalForm.identity(n)
        x = Conjugator.identity(n)
        iterations = 0
        for bit in bin(r)[2:]:
            iterations += 1
            candidate = mul(h, h)
            if bit == "1":
                candidate = mul(candidate, tracker)
            h, step = to_super_summit(candidate)
            if h.canonical_length > 1:
                raise NotPeriodic(f"super summit power has canonical length {h.canonical_length}")
            if not step.is_empty:
                tracker = apply(step, tracker)
                x = compose(invert(step), x)
            logger.debug("power step %d (bit %s): h = %s", iterations, bit, h)
            if self.config.check_invariants:
                self._check_commuting(tracker, h)
        return PowerConjugacyResult(h, x, iterations)

    algorithm_I = power_conjugacy

    def _check_commuting(self, tracker: NormalForm, h: NormalForm) -> None:
        if mul(tracker, h) != mul(h, tracker):
            raise InternalInconsistency(f"{tracker} and {h} no longer commute")
        if not (tracker.is_left_weighted() and h.is_left_weighted()):
            raise InternalInconsistency("a tracked normal form lost left-weightedness")

    def decide(self, alpha: NormalForm) -> PeriodicVerdict:
        """
        Decide periodicity; solve the search problem for delta-type braids.

        Returns:
            NON_PERIODIC; DELTA_TYPE(k, gamma) with gamma^-1 alpha gamma = delta^k;
            or EPSILON_TYPE(k) without a conjugator

        Raises:
            InternalInconsistency: If the (n-1)st power is a delta-power not divisible by n
        """
        n = alpha.n
        beta, gamma = to_super_summit(alpha)
        if not beta.factors:
            return PeriodicVerdict(VerdictKind.DELTA_TYPE, beta.inf, gamma)
        if beta.canonical_length > 1:
            return PeriodicVerdict(VerdictKind.NON_PERIODIC)
        try:
            powered = self.power_conjugacy(beta, n - 1)
        except NotPeriodic:
            return PeriodicVerdict(VerdictKind.NON_PERIODIC)
        h = powered.h
        if h.factors:
            return PeriodicVerdict(VerdictKind.NON_PERIODIC)
        if h.inf % n:
            raise InternalInconsistency(f"(n-1)st power is delta^{h.inf}, not a multiple of {n}")
        return PeriodicVerdict(VerdictKind.EPSILON_TYPE, h.inf // n)

    algorithm_II = decide

    def merge_cycles(
        self,
        alpha: NormalForm,
        d: int,
        trace: Optional[CycleMergeTrace] = None,
    ) -> Conjugator:
        """
        Conjugate a super summit element of epsilon^d onto epsilon^d.

        While the simple factor has several parallel descending cycles, the
        one with the largest maximal index is partially cycled along its
        tau^-d orbit until it merges with another cycle. The last cycle is a
        run {t, ..., t+d} modulo n, and delta^(1-t) finishes the job.

        Args:
            alpha: delta^d a, a super summit element conjugate to epsilon^d
            d: Proper divisor of n - 1
            trace: Optional record of the merge rounds

        Returns:
            gamma with gamma^-1 alpha gamma = epsilon^d

        Raises:
            BadParameters: If d is not a proper divisor of n - 1
            NotInSSS: If alpha does not behave like an element of [epsilon^d]^S
        """
        n = alpha.n
        if d <= 0 or d >= n - 1 or (n - 1) % d:
            raise BadParameters(f"d={d} is not a proper divisor of {n - 1}")
        q = (n - 1) // d
        if alpha.inf != d or alpha.canonical_length != 1:
            raise NotInSSS(f"{alpha} is not of the form delta^{d} a")

        gamma = Conjugator.identity(n)
        current = alpha
        cycles = cycles_of(current.factors[0])
        while len(cycles) > 1:
            moving = cycles[0]
            count = len(cycles)
            chain = [moving]
            for _ in range(q - 1):
                try:
                    current, step = partial_cycling(current, moving.to_simple())
                except NotAPrefix as e:
                    raise NotInSSS(str(e)) from e
                gamma = compose(gamma, step)
                if current.inf != d or current.canonical_length != 1:
                    raise NotInSSS(f"partial cycling left the super summit set: {current}")
                cycles = cycles_of(current.factors[0])
                moving = tau_cycle(moving, -d)
                chain.append(moving)
                if len(cycles) < count:
                    break
            else:
                raise NotInSSS(f"{chain[0]} did not merge within {q - 1} partial cyclings")
            logger.debug("merge round: %s", " -> ".join(str(c) for c in chain))
            if trace is not None:
                trace.rounds.append(chain)

        block = cycles[0].block if cycles else frozenset()
        t = self._run_start(block, n, d)
        if t is None:
            raise NotInSSS(f"final cycle {cycles[0] if cycles else 'e'} is not a run of length {d + 1}")
        if trace is not None:
            trace.t = t
        return compose(gamma, Conjugator.from_delta(n, 1 - t))

    algorithm_III = merge_cycles

    @staticmethod
    def _run_start(block: frozenset, n: int, d: int) -> Optional[int]:
        """The t with block = {t, t+1, ..., t+d} modulo n, if any."""
        if len(block) != d + 1:
            return None
        for t in sorted(block):
            if all((t - 1 + i) % n + 1 in block for i in range(d + 1)):
                return t
        return None

    def epsilon_search(
        self,
        alpha: NormalForm,
        k: int,
        trace: Optional[CycleMergeTrace] = None,
    ) -> Conjugator:
        """
        Conjugate a super summit element of epsilon^k onto epsilon^k.

        Writes k = (n-1)u + v, strips the central delta^(nu), powers the rest
        to the C-tight exponent r from epsilon_reduction, shifts by delta^(ns)
        and finishes with merge_cycles.

        Returns:
            gamma with gamma^-1 alpha gamma = epsilon^k
        """
        n = alpha.n
        u, v = divmod(k, n - 1)
        if v == 0:
            return Conjugator.identity(n)
        alpha0 = alpha.with_inf(alpha.inf - n * u)
        d, r, s = epsilon_reduction(v, n)
        logger.debug("epsilon^%d in B_%d: d=%d r=%d s=%d", k, n, d, r, s)
        powered = self.power_conjugacy(alpha0, r)
        alpha2 = powered.h.with_inf(powered.h.inf + n * s)
        gamma2 = self.merge_cycles(alpha2, d, trace)
        return compose(invert(powered.conjugator), gamma2)

    algorithm_IV = epsilon_search

    def solve(self, alpha: NormalForm, trace: Optional[CycleMergeTrace] = None) -> PeriodicVerdict:
        """
        Complete conjugacy decision and search for one braid.

        Args:
            alpha: Any braid in normal form
            trace: Optional record of the merge rounds for epsilon-type input

        Returns:
            PeriodicVerdict; when config.verify is set, verified is filled in

        Raises:
            InternalInconsistency: If a produced conjugator fails verification
        """
        alpha1, gamma0 = to_super_summit(alpha)
        if alpha1.canonical_length > 1:
            logger.info("non-periodic: summit canonical length %d", alpha1.canonical_length)
            return PeriodicVerdict(VerdictKind.NON_PERIODIC)

        decided = self.decide(alpha1)
        if decided.kind is VerdictKind.NON_PERIODIC:
            logger.info("non-periodic")
            return decided
        if decided.kind is VerdictKind.DELTA_TYPE:
            gamma = compose(gamma0, decided.conjugator)
        else:
            gamma = compose(gamma0, self.epsilon_search(alpha1, decided.k, trace))

        verdict = PeriodicVerdict(decided.kind, decided.k, gamma)
        if self.config.verify:
            verdict.verified = apply(gamma, alpha) == verdict.target(alpha.n)
            if not verdict.verified:
                raise InternalInconsistency(f"conjugator for {verdict.kind.value} k={verdict.k} failed verification")
        logger.info("%s k=%d", verdict.kind.value, verdict.k)
        return verdict

    algorithm_V = solve
