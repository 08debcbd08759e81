# BKL Braid Workshop - Brute-Force Oracle
# Exhaustive ground truth for summit sets at desk scale
"""
Summit Oracle Module

Independent, exhaustive checks that do not rely on the periodic solver:
enumeration of all simple elements, brute-force super summit sets of
epsilon^k, the Catalan-size family of ultra summit elements, and closure
and identity checks over those tables.

Every brute-force routine is guarded by a strand limit and raises TooLarge
instead of truncating.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Sequence, Set, Tuple

from ..braidword import BraidWord, DeltaPower, NormalForm, Simple, normalize, power
from ..conjugacy import Conjugator, apply, partial_cycling
from ..errors import (
    MAX_ENUMERATION_STRANDS,
    MAX_SSS_STRANDS,
    BadParameters,
    InternalInconsistency,
    validate_same_strands,
    validate_strands,
)
from ..ncp import RIGHT, SimpleElement, atom_length, complement_in, simple_from_cycles, tau_power

logger = logging.getLogger(__name__)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def noncrossing_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    """
    All non-crossing partitions of a sorted sequence, each exactly once.

    The block holding the first item is grown one element at a time; the
    items it jumps over, and the items after it, are partitioned on their own.
    """
    if not items:
        yield []
        return
    yield from _grow_block([items[0]], list(items[1:]))


def _grow_block(block: List[int], rest: List[int]) -> Iterator[List[List[int]]]:
    for tail in noncrossing_partitions(rest):
        yield [block] + tail
    for j in range(len(rest)):
        for inner in noncrossing_partitions(rest[:j]):
            for more in _grow_block(block + [rest[j]], rest[j + 1:]):
                yield inner + more


def _sort_key(g: NormalForm) -> Tuple:
    return (g.inf, tuple(a.image for a in g.factors))


@dataclass(frozen=True)
class SssTable:
    """Brute-force super summit set of epsilon^k in B_n."""

    n: int
    k: int
    elements: FrozenSet[NormalForm]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: NormalForm) -> bool:
        return g in self.elements

    def sorted(self) -> List[NormalForm]:
        return sorted(self.elements, key=_sort_key)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "k": self.k,
            "size": len(self.elements),
            "elements": [str(g) for g in self.sorted()],
        }


@dataclass
class ClosureReport:
    """Partial cyclings that left the table."""

    n: int
    k: int
    checked: int = 0
    violations: List[Tuple[NormalForm, SimpleElement, NormalForm]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "k": self.k,
            "checked": self.checked,
            "violations": [
                {"element": str(g), "prefix": str(b), "result": str(h)}
                for g, b, h in self.violations
            ],
        }


@dataclass
class IdentityReport:
    """Elements of a table that failed a named identity."""

    name: str
    n: int
    k: int
    checked: int = 0
    failures: List[NormalForm] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "n": self.n,
            "k": self.k,
            "checked": self.checked,
            "failures": [str(g) for g in self.failures],
        }


class SummitOracle:
    """
    Exhaustive ground truth for simple elements and summit sets.

    Attributes:
        max_enumeration_strands: Strand limit for enumerate_simples
        max_sss_strands: Strand limit for brute_sss_epsilon
    """

    def __init__(
        self,
        max_enumeration_strands: int = MAX_ENUMERATION_STRANDS,
        max_sss_strands: int = MAX_SSS_STRANDS,
    ):
        self.max_enumeration_strands = max_enumeration_strands
        self.max_sss_strands = max_sss_strands

    def enumerate_simples(self, n: int) -> Iterator[SimpleElement]:
        """
        Every simple element of B_n, i.e. every non-crossing partition of {1..n}.

        Raises:
            TooLarge: If n exceeds max_enumeration_strands
        """
        validate_strands(n, 1, self.max_enumeration_strands)
        for blocks in noncrossing_partitions(list(range(1, n + 1))):
            yield SimpleElement.from_blocks(n, blocks)

    def left_divisors(self, a: SimpleElement) -> Iterator[SimpleElement]:
        """All simple b with b <=_L a: refinements of a's partition."""
        choices = [list(noncrossing_partitions(list(block))) for block in a.blocks if len(block) > 1]
        for parts in itertools.product(*choices):
            yield SimpleElement.from_blocks(a.n, [blk for part in parts for blk in part])

    def brute_sss_epsilon(self, n: int, k: int) -> SssTable:
        """
        Super summit set of epsilon^k, 0 < k < n - 1, by exhaustion.

        Members are exactly the delta^k a with ||a|| = k (forced by the
        exponent sum kn) whose (n-1)st power is delta^(nk).

        Raises:
            TooLarge: If n exceeds max_sss_strands
            BadParameters: If k is out of range
        """
        validate_strands(n, 3, self.max_sss_strands)
        if not 0 < k < n - 1:
            raise BadParameters(f"need 0 < k < {n - 1}, got k={k}")
        target = NormalForm.delta_power(n, n * k)
        elements: Set[NormalForm] = set()
        for a in self.enumerate_simples(n):
            if atom_length(a) != k:
                continue
            g = NormalForm(n, k, (a,))
            if power(g, n - 1) == target:
                elements.add(g)
        logger.debug("super summit set of epsilon^%d in B_%d has %d elements", k, n, len(elements))
        return SssTable(n, k, frozenset(elements))

    def uss_lower_bound(self, n: int, u: int, k: int) -> FrozenSet[NormalForm]:
        """
        Catalan(k) distinct ultra summit elements delta^u tau^u(b) a, one for
        every factorization a b = [k, ..., 1].

        Args:
            n: Strand count
            u: Power of delta
            k: Length of the descending cycle, with 2 <= k <= u <= n/2 or
               2 <= k = u + 1 <= n/2

        Raises:
            BadParameters: If the constraint fails
            InternalInconsistency: If an element is not simple-factored or two coincide
        """
        validate_strands(n, 3)
        nested = 2 <= k <= u and 2 * u <= n
        adjacent = 2 <= k == u + 1 and 2 * k <= n
        if not (nested or adjacent):
            raise BadParameters(f"(n, u, k) = ({n}, {u}, {k}) violates the constraint")
        top = simple_from_cycles(n, [list(range(k, 0, -1))])
        built: List[NormalForm] = []
        for a in self.left_divisors(top):
            b = complement_in(a, top, RIGHT)
            alpha = normalize(BraidWord.of(n, DeltaPower(u), Simple(tau_power(b, u)), Simple(a)))
            if alpha.inf != u or alpha.canonical_length != 1:
                raise InternalInconsistency(f"{alpha} is not of the form delta^{u} x")
            built.append(alpha)
        distinct = frozenset(built)
        if len(distinct) != len(built):
            raise InternalInconsistency(f"only {len(distinct)} of {len(built)} elements are distinct")
        return distinct

    def check_partial_cycling_closure(self, table: SssTable) -> ClosureReport:
        """Partially cycle every element by every left divisor of its factor."""
        report = ClosureReport(table.n, table.k)
        for g in table.sorted():
            for b in self.left_divisors(g.factors[0]):
                if b.is_identity:
                    continue
                h, _ = partial_cycling(g, b)
                report.checked += 1
                if h not in table:
                    report.violations.append((g, b, h))
        return report

    def check_tau_stability(self, table: SssTable) -> IdentityReport:
        """The table is closed under tau, conjugation by delta."""
        report = IdentityReport("tau-stability", table.n, table.k)
        for g in table.sorted():
            report.checked += 1
            if g.tau(1) not in table:
                report.failures.append(g)
        return report

    def check_twisted_product(self, table: SssTable) -> IdentityReport:
        """
        For epsilon^d with d | n-1 and q = (n-1)/d, every delta^u a in the
        table satisfies tau^((q-1)u)(a) ... tau^u(a) a = delta.

        Raises:
            BadParameters: If k does not divide n - 1
        """
        n, u = table.n, table.k
        if (n - 1) % u:
            raise BadParameters(f"{u} does not divide {n - 1}")
        q = (n - 1) // u
        delta = NormalForm.delta_power(n, 1)
        report = IdentityReport("twisted-product", n, u)
        for g in table.sorted():
            a = g.factors[0]
            word = BraidWord(n, tuple(Simple(tau_power(a, i * u)) for i in range(q - 1, -1, -1)))
            report.checked += 1
            if normalize(word) != delta:
                report.failures.append(g)
        return report

    def verify_conjugation(self, alpha: NormalForm, gamma: Conjugator, target: NormalForm) -> bool:
        """True iff gamma^-1 alpha gamma equals target exactly."""
        validate_same_strands(alpha.n, gamma.n, target.n)
        return apply(gamma, alpha) == target
