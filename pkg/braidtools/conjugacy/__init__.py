from .conjugacy import (
    Conjugator,
    apply,
    compose,
    cycling,
    decycling,
    invert,
    partial_cycling,
    to_super_summit,
)

__all__ = [
    "Conjugator",
    "apply",
    "compose",
    "cycling",
    "decycling",
    "invert",
    "partial_cycling",
    "to_super_summit",
]
