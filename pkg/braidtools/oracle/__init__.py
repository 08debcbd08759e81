from .harness import random_simple, random_word, run_property_suites
from .oracle import (
    ClosureReport,
    IdentityReport,
    SssTable,
    SummitOracle,
    catalan,
    noncrossing_partitions,
)

__all__ = [
    "ClosureReport",
    "IdentityReport",
    "SssTable",
    "SummitOracle",
    "catalan",
    "noncrossing_partitions",
    "random_simple",
    "random_word",
    "run_property_suites",
]
