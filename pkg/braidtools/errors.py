"""
Errors and Limits for BKL Braid Workshop

This module holds the exception hierarchy shared by every tool together with
the resource limits that keep brute-force enumeration at desk scale.
"""

from typing import Optional


class BraidError(Exception):
    """Base class for every error raised by the braid tools."""
    pass


class IndexOutOfRange(BraidError, ValueError):
    """A strand index lies outside the accepted range."""
    pass


class OverlappingBlocks(BraidError):
    """Two descending cycles share an index."""
    pass


class CrossingBlocks(BraidError):
    """Two blocks of a partition have intersecting convex hulls."""
    pass


class StrandMismatch(BraidError):
    """Operands live in braid groups with different strand counts."""
    pass


class ExponentOverflow(BraidError):
    """An exponent left the signed 64-bit range."""
    pass


class NotAPrefix(BraidError):
    """A simple element is not a left divisor of the first canonical factor."""
    pass


class NotPeriodic(BraidError):
    """A super summit element of canonical length above one showed up."""
    pass


class NotInSSS(BraidError):
    """The input is not in the super summit set it was claimed to be in."""
    pass


class InternalInconsistency(BraidError):
    """A result contradicts a proven invariant; indicates a bug."""
    pass


class NotReduced(BraidError, ValueError):
    """A fraction p/q was passed with gcd(p, q) != 1."""
    pass


class TooLarge(BraidError):
    """A brute-force request exceeds the configured size guard."""
    pass


class BadParameters(BraidError, ValueError):
    """Parameters violate the documented constraints."""
    pass


class BraidSyntaxError(BraidError):
    """Braid notation could not be parsed."""
    pass


class NotParallel(BraidError):
    """Cycles written as one simple factor are not parallel."""
    pass


class BadPower(BraidError, ValueError):
    """A `^` suffix is not an integer."""
    pass


# Resource limits
MAX_ENUMERATION_STRANDS = 14  # Catalan(14) = 2,674,440 simple elements
MAX_SSS_STRANDS = 10          # brute-force super summit tables
INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1


def check_int64(value: int, what: str = "exponent") -> int:
    """
    Return value unchanged if it fits a signed 64-bit integer.

    Raises:
        ExponentOverflow: If value is out of range
    """
    if value < INT64_MIN or value > INT64_MAX:
        raise ExponentOverflow(f"{what} {value} does not fit in 64 bits")
    return value


def validate_strands(n: int, minimum: int = 1, maximum: Optional[int] = None) -> int:
    """
    Validate a strand count.

    Args:
        n: Strand count to check
        minimum: Smallest allowed value
        maximum: Largest allowed value, None for unbounded

    Returns:
        n

    Raises:
        BadParameters: If n is not an integer or is below minimum
        TooLarge: If n exceeds maximum
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise BadParameters(f"strand count must be an integer, got {n!r}")
    if n < minimum:
        raise BadParameters(f"strand count {n} is below {minimum}")
    if maximum is not None and n > maximum:
        raise TooLarge(f"strand count {n} exceeds the limit of {maximum}")
    return n


def validate_same_strands(*counts: int) -> int:
    """
    Check that all strand counts agree and return the common value.

    Raises:
        StrandMismatch: If two counts differ
    """
    first = counts[0]
    for other in counts[1:]:
        if other != first:
            raise StrandMismatch(f"strand counts differ: {first} vs {other}")
    return first
