# BKL Braid Workshop - Non-Crossing Partitions
# Simple elements of the band-generator Garside structure
"""
Non-Crossing Partition Module

Simple elements of B_n under the Birman-Ko-Lee structure are products of
parallel descending cycles, one for each block of a non-crossing partition
of {1..n}. They are stored as permutation tables acting from the right: the
descending cycle on a block i1 < i2 < ... < ik sends i_j to i_(j+1) and i_k
back to i_1, so delta sends i to i + 1 mod n.

Left and right divisibility among simple elements both coincide with
refinement of partitions, which makes the meet a blockwise intersection and
the join a non-crossing closure.

Indices are 0-based inside permutation tables and 1-based everywhere else.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..errors import (
    BadParameters,
    CrossingBlocks,
    IndexOutOfRange,
    InternalInconsistency,
    OverlappingBlocks,
    validate_same_strands,
    validate_strands,
)

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]

LEFT = "left"
RIGHT = "right"


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Permutation p followed by q."""
    return tuple(q[x] for x in p)


def invert(p: Sequence[int]) -> Permutation:
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def rotation(n: int, u: int) -> Permutation:
    """Permutation induced by delta^u."""
    u %= n
    return tuple((i + u) % n for i in range(n))


def _normalize_index(n: int, i: int) -> int:
    """Reduce a possibly wrapped-around index into 1..n."""
    if not isinstance(i, int) or isinstance(i, bool):
        raise IndexOutOfRange(f"index {i!r} is not an integer")
    if 1 <= i <= n:
        return i
    if n < i < 2 * n:
        return i - n
    raise IndexOutOfRange(f"index {i} outside 1..{n} (wraparound allowed up to {2 * n - 1})")


def _first_crossing(labels: Sequence[int]) -> Optional[Tuple[int, int]]:
    """
    Scan block labels in index order and return two labels whose blocks
    cross, or None when the partition is non-crossing.
    """
    last: Dict[int, int] = {}
    for i, b in enumerate(labels):
        last[b] = i
    stack: List[int] = []
    seen = set()
    for i, b in enumerate(labels):
        if b not in seen:
            seen.add(b)
            stack.append(b)
        elif stack[-1] != b:
            return stack[-1], b
        if last[b] == i:
            stack.pop()
    return None


@dataclass(frozen=True)
class DescendingCycle:
    """A descending cycle [i_k, ..., i_1] with i_k > ... > i_1, all in 1..n."""

    indices: Tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.indices) < 2:
            raise BadParameters(f"a descending cycle needs two indices, got {list(self.indices)}")
        for i in self.indices:
            if not 1 <= i <= self.n:
                raise IndexOutOfRange(f"index {i} outside 1..{self.n}")
        if any(a <= b for a, b in zip(self.indices, self.indices[1:])):
            raise BadParameters(f"indices {list(self.indices)} are not strictly decreasing")

    @classmethod
    def parse(cls, n: int, indices: Iterable[int]) -> "DescendingCycle":
        """
        Build a cycle from indices in any order, reducing wraparound forms
        such as [12, 11, 10, 9] in B_10 to [10, 9, 2, 1].

        Raises:
            IndexOutOfRange: If an index is not in 1..2n-1
            OverlappingBlocks: If an index repeats
            BadParameters: If fewer than two indices are given
        """
        reduced = [_normalize_index(n, i) for i in indices]
        if len(set(reduced)) != len(reduced):
            raise OverlappingBlocks(f"cycle {list(indices)} repeats an index modulo {n}")
        return cls(tuple(sorted(reduced, reverse=True)), n)

    @property
    def block(self) -> frozenset:
        return frozenset(self.indices)

    @property
    def top(self) -> int:
        return self.indices[0]

    def to_simple(self) -> "SimpleElement":
        return SimpleElement.from_blocks(self.n, [self.indices])

    def __str__(self) -> str:
        return "[" + ",".join(str(i) for i in self.indices) + "]"


@dataclass(frozen=True)
class SimpleElement:
    """
    A simple element: a product of parallel descending cycles.

    Attributes:
        n: Strand count
        image: Permutation table, image[i] is where strand i + 1 goes (0-based)
    """

    n: int
    image: Permutation

    @classmethod
    def identity(cls, n: int) -> "SimpleElement":
        return cls(n, tuple(range(n)))

    @classmethod
    def delta(cls, n: int) -> "SimpleElement":
        return cls(n, rotation(n, 1))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "SimpleElement":
        """Build from 1-based blocks assumed disjoint and non-crossing."""
        image = list(range(n))
        for block in blocks:
            ordered = sorted(block)
            for a, b in zip(ordered, ordered[1:] + ordered[:1]):
                image[a - 1] = b - 1
        return cls(n, tuple(image))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SimpleElement":
        """Build from a 0-based block label per index."""
        n = len(labels)
        groups: Dict[int, List[int]] = {}
        for i, b in enumerate(labels):
            groups.setdefault(b, []).append(i)
        image = list(range(n))
        for members in groups.values():
            for a, b in zip(members, members[1:] + members[:1]):
                image[a] = b
        return cls(n, tuple(image))

    @classmethod
    def from_permutation(cls, perm: Sequence[int], check: bool = False) -> "SimpleElement":
        """
        Wrap a permutation known to come from a simple element.

        Args:
            perm: 0-based permutation table
            check: Revalidate the non-crossing, descending-cycle shape

        Raises:
            InternalInconsistency: If check is set and perm is not simple
        """
        element = cls(len(perm), tuple(perm))
        if check:
            element.validate()
        return element

    @cached_property
    def labels(self) -> Tuple[int, ...]:
        """0-based block label (the block minimum) of every index."""
        labels = [-1] * self.n
        for start in range(self.n):
            if labels[start] >= 0:
                continue
            i = start
            while labels[i] < 0:
                labels[i] = start
                i = self.image[i]
        return tuple(labels)

    @cached_property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        """1-based ascending blocks, ordered by their minimum."""
        groups: Dict[int, List[int]] = {}
        for i, b in enumerate(self.labels):
            groups.setdefault(b, []).append(i + 1)
        return tuple(tuple(groups[b]) for b in sorted(groups))

    @cached_property
    def inverse_image(self) -> Permutation:
        return invert(self.image)

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))

    @property
    def is_delta(self) -> bool:
        return self.image == rotation(self.n, 1)

    def validate(self) -> None:
        """
        Check that every orbit is an ascending successor cycle and the
        partition is non-crossing.

        Raises:
            InternalInconsistency: If the table is not a simple element
        """
        if sorted(self.image) != list(range(self.n)):
            raise InternalInconsistency(f"{self.image} is not a permutation")
        if SimpleElement.from_labels(self.labels).image != self.image:
            raise InternalInconsistency(f"{self.image} has a cycle that is not descending")
        if _first_crossing(self.labels) is not None:
            raise InternalInconsistency(f"{self.image} has crossing blocks")

    def __str__(self) -> str:
        cycles = cycles_of(self)
        if not cycles:
            return "e"
        return "".join(str(c) for c in cycles)


CycleLike = Union[DescendingCycle, Sequence[int]]


def simple_from_cycles(n: int, cycles: Iterable[CycleLike]) -> SimpleElement:
    """
    Build the simple element whose non-trivial blocks are the given cycles.

    Args:
        n: Strand count
        cycles: Descending cycles or index lists (wraparound allowed)

    Returns:
        The product of the cycles as a SimpleElement

    Raises:
        IndexOutOfRange: If an index is out of range
        OverlappingBlocks: If two cycles share an index
        CrossingBlocks: If two cycles are not parallel
    """
    validate_strands(n)
    labels = list(range(n))
    owner: Dict[int, DescendingCycle] = {}
    for raw in cycles:
        cycle = raw if isinstance(raw, DescendingCycle) else DescendingCycle.parse(n, raw)
        validate_same_strands(n, cycle.n)
        for i in cycle.indices:
            if i in owner:
                raise OverlappingBlocks(f"cycles {owner[i]} and {cycle} share index {i}")
            owner[i] = cycle
            labels[i - 1] = cycle.indices[-1] - 1
    crossing = _first_crossing(labels)
    if crossing is not None:
        a, b = (owner[label + 1] for label in crossing)
        raise CrossingBlocks(f"cycles {a} and {b} cross")
    return SimpleElement.from_labels(labels)


def band_generator(n: int, t: int, s: int) -> SimpleElement:
    """The band generator a_{t,s}; the order of t and s does not matter."""
    return simple_from_cycles(n, [[t, s]])


def cycles_of(a: SimpleElement) -> List[DescendingCycle]:
    """Parallel descending cycles of a, largest maximal index first."""
    cycles = [
        DescendingCycle(tuple(reversed(block)), a.n)
        for block in a.blocks
        if len(block) >= 2
    ]
    cycles.sort(key=lambda c: c.top, reverse=True)
    return cycles


def tau_power(a: SimpleElement, u: int) -> SimpleElement:
    """delta^-u a delta^u: every index moves up by u modulo n."""
    n = a.n
    u %= n
    if u == 0:
        return a
    image = [0] * n
    for i, x in enumerate(a.image):
        image[(i + u) % n] = (x + u) % n
    return SimpleElement(n, tuple(image))


def tau_cycle(c: DescendingCycle, u: int) -> DescendingCycle:
    """Shift a descending cycle by u modulo n."""
    return DescendingCycle.parse(c.n, [(i - 1 + u) % c.n + 1 for i in c.indices])


def atom_length(a: SimpleElement) -> int:
    """Number of band generators in a: n minus the number of blocks."""
    return a.n - len(a.blocks)


def meet_left(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    """Greatest common left divisor: the common refinement of the partitions."""
    validate_same_strands(a.n, b.n)
    pairs: Dict[Tuple[int, int], int] = {}
    labels = []
    for i, key in enumerate(zip(a.labels, b.labels)):
        labels.append(pairs.setdefault(key, i))
    return SimpleElement.from_labels(labels)


def join_left(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    """Least common right multiple: non-crossing closure of the partition join."""
    n = validate_same_strands(a.n, b.n)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for i in range(n):
        union(i, a.labels[i])
        union(i, b.labels[i])

    labels = [find(i) for i in range(n)]
    while True:
        crossing = _first_crossing(labels)
        if crossing is None:
            break
        union(*crossing)
        labels = [find(i) for i in range(n)]
    return SimpleElement.from_labels(labels)


def complement_delta(a: SimpleElement, side: str = RIGHT) -> SimpleElement:
    """
    Complement of a in delta.

    Args:
        a: Simple element
        side: RIGHT for a* with a.a* = delta, LEFT for *a with *a.a = delta

    Returns:
        The complement as a SimpleElement

    Raises:
        BadParameters: If side is not 'left' or 'right'
        InternalInconsistency: If the defining product is not delta
    """
    delta = rotation(a.n, 1)
    if side == RIGHT:
        image = compose(a.inverse_image, delta)
        product = compose(a.image, image)
    elif side == LEFT:
        image = compose(delta, a.inverse_image)
        product = compose(image, a.image)
    else:
        raise BadParameters(f"side must be 'left' or 'right', got {side!r}")
    if product != delta:
        raise InternalInconsistency(f"complement of {a} does not multiply to delta")
    return SimpleElement(a.n, image)


def complement_in(a: SimpleElement, b: SimpleElement, side: str = RIGHT) -> SimpleElement:
    """
    Complement of a in the join of a and b.

    RIGHT returns c with a.c = a v_L b; LEFT returns c with c.a = a v_R b.
    """
    validate_same_strands(a.n, b.n)
    if side == RIGHT:
        return SimpleElement(a.n, compose(a.inverse_image, join_left(a, b).image))
    if side == LEFT:
        return SimpleElement(a.n, compose(join_right(a, b).image, a.inverse_image))
    raise BadParameters(f"side must be 'left' or 'right', got {side!r}")


def meet_right(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    """a ^_R b = *(a* v_L b*)."""
    validate_same_strands(a.n, b.n)
    joined = join_left(complement_delta(a, RIGHT), complement_delta(b, RIGHT))
    return complement_delta(joined, LEFT)


def join_right(a: SimpleElement, b: SimpleElement) -> SimpleElement:
    """a v_R b = (*a ^_L *b)*."""
    validate_same_strands(a.n, b.n)
    met = meet_left(complement_delta(a, LEFT), complement_delta(b, LEFT))
    return complement_delta(met, RIGHT)


def left_weight_pair(a: SimpleElement, b: SimpleElement) -> Tuple[SimpleElement, SimpleElement]:
    """
    Rewrite the product a.b as a left-weighted pair.

    Returns:
        (a', b') with a'.b' = a.b and a'* ^_L b' = e; b' may be the identity
    """
    validate_same_strands(a.n, b.n)
    t = meet_left(complement_delta(a, RIGHT), b)
    if t.is_identity:
        return a, b
    return (
        SimpleElement(a.n, compose(a.image, t.image)),
        SimpleElement(a.n, compose(t.inverse_image, b.image)),
    )


def is_left_weighted(a: SimpleElement, b: SimpleElement) -> bool:
    return meet_left(complement_delta(a, RIGHT), b).is_identity


def is_left_divisor(a: SimpleElement, b: SimpleElement) -> bool:
    """a <=_L b, which for simple elements is refinement."""
    return meet_left(a, b) == a


def is_parallel(c1: DescendingCycle, c2: DescendingCycle) -> bool:
    """True iff the two cycles are disjoint and their convex hulls do not meet."""
    if c1.n != c2.n or c1.block & c2.block:
        return False
    labels = [
        (0 if i in c1.block else 1)
        for i in sorted(c1.block | c2.block)
    ]
    return _first_crossing(labels) is None
