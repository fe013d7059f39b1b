from termcode.dispersion.exponent import (
    ExponentResult,
    decide_threshold,
    fitted_exponents,
    growth_oracle,
    integer_exponent,
    single_relay_bounds,
)
from termcode.dispersion.reduction import Reduction, lift_decoders, reduce_to_termcoding
from termcode.dispersion.TermDag import TermDag

__all__ = [
    "ExponentResult",
    "Reduction",
    "TermDag",
    "decide_threshold",
    "fitted_exponents",
    "growth_oracle",
    "integer_exponent",
    "lift_decoders",
    "reduce_to_termcoding",
    "single_relay_bounds",
]
