from termcode.semantics.counting import (
    Evaluator,
    SolutionReport,
    count_solutions,
    dispersion_image,
    eval_term,
    objective_value,
    projection_count,
    verify_witness,
)
from termcode.semantics.Interpretation import Interpretation, table_shape
from termcode.semantics.witness import Witness

__all__ = [
    "Evaluator",
    "Interpretation",
    "SolutionReport",
    "Witness",
    "count_solutions",
    "dispersion_image",
    "eval_term",
    "objective_value",
    "projection_count",
    "table_shape",
    "verify_witness",
]
