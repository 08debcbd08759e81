from .ncp import (
    LEFT,
    RIGHT,
    DescendingCycle,
    SimpleElement,
    atom_length,
    band_generator,
    complement_delta,
    complement_in,
    cycles_of,
    is_left_divisor,
    is_left_weighted,
    is_parallel,
    join_left,
    join_right,
    left_weight_pair,
    meet_left,
    meet_right,
    simple_from_cycles,
    tau_cycle,
    tau_power,
)

__all__ = [
    "LEFT",
    "RIGHT",
    "DescendingCycle",
    "SimpleElement",
    "atom_length",
    "band_generator",
    "complement_delta",
    "complement_in",
    "cycles_of",
    "is_left_divisor",
    "is_left_weighted",
    "is_parallel",
    "join_left",
    "join_right",
    "left_weight_pair",
    "meet_left",
    "meet_right",
    "simple_from_cycles",
    "tau_cycle",
    "tau_power",
]
