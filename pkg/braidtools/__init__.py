# BKL Braid Workshop - Tools Package
"""
Braid groups under the Birman-Ko-Lee Garside structure: simple elements,
left normal forms, summit sets and the periodic conjugacy solver.
"""

from .braidword import BraidWord, NormalForm, normalize
from .conjugacy import Conjugator, apply, to_super_summit
from .errors import BraidError
from .ncp import DescendingCycle, SimpleElement, simple_from_cycles
from .oracle import SummitOracle
from .periodic import PeriodicSolver, PeriodicVerdict, SolverConfig, VerdictKind

__version__ = "1.0.0"

__all__ = [
    "BraidError",
    "BraidWord",
    "Conjugator",
    "DescendingCycle",
    "NormalForm",
    "PeriodicSolver",
    "PeriodicVerdict",
    "SimpleElement",
    "SolverConfig",
    "SummitOracle",
    "VerdictKind",
    "apply",
    "normalize",
    "simple_from_cycles",
    "to_super_summit",
]
