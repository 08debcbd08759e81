from .periodic import (
    ARTIN,
    BKL,
    DELTA,
    EPSILON,
    CycleMergeTrace,
    PeriodicSolver,
    PeriodicVerdict,
    PowerConjugacyResult,
    Rational,
    SolverConfig,
    VerdictKind,
    bcmw_exponent,
    central_exponent,
    classify_pc,
    classify_periodic,
    epsilon_reduction,
    is_bcmw_power,
    t_inf_periodic,
)

__all__ = [
    "ARTIN",
    "BKL",
    "DELTA",
    "EPSILON",
    "CycleMergeTrace",
    "PeriodicSolver",
    "PeriodicVerdict",
    "PowerConjugacyResult",
    "Rational",
    "SolverConfig",
    "VerdictKind",
    "bcmw_exponent",
    "central_exponent",
    "classify_pc",
    "classify_periodic",
    "epsilon_reduction",
    "is_bcmw_power",
    "t_inf_periodic",
]
