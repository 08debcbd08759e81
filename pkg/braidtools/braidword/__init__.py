from .braidword import (
    BraidWord,
    DeltaPower,
    NormalForm,
    Simple,
    SimpleInverse,
    Syllable,
    concat,
    exponent_sum,
    inverse,
    mul,
    normalize,
    permutation_of,
    power,
)

__all__ = [
    "BraidWord",
    "DeltaPower",
    "NormalForm",
    "Simple",
    "SimpleInverse",
    "Syllable",
    "concat",
    "exponent_sum",
    "inverse",
    "mul",
    "normalize",
    "permutation_of",
    "power",
]
