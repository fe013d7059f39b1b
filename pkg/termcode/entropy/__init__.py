from termcode.entropy.bounds import BoundResult, shannon_bound, system_bound
from termcode.entropy.EntropyLP import EntropyLP
from termcode.entropy.simplex import LinearConstraint, LPSolution, LPStatus, Sense, lp_maximize

__all__ = [
    "BoundResult",
    "EntropyLP",
    "LPSolution",
    "LPStatus",
    "LinearConstraint",
    "Sense",
    "lp_maximize",
    "shannon_bound",
    "system_bound",
]
