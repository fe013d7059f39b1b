from typing import Mapping, Optional, Sequence

from termcode.constants import Objective, SearchMode
from termcode.exceptions import ParameterError
from termcode.ir.System import System
from termcode.search.annealing import anneal_max
from termcode.search.exhaustive import exhaustive_max
from termcode.search.SearchParams import SearchParams, SearchResult
from termcode.semantics.Interpretation import Interpretation


def maximize(
    system: System,
    sizes: Mapping[str, int],
    params: Optional[SearchParams] = None,
    objective: Objective = Objective.SOLUTIONS,
    coordinates: Optional[Sequence[str]] = None,
    fixed: Optional[Mapping[str, object]] = None,
    initial: Optional[Interpretation] = None,
    target: Optional[int] = None,
) -> SearchResult:
    """
    Runs the search selected by params.mode. Exhaustive search ignores initial, annealing
    ignores target.
    """
    params = params or SearchParams()
    if params.mode == SearchMode.EXHAUSTIVE:
        return exhaustive_max(system, sizes, params, fixed, objective, coordinates, target)
    return anneal_max(system, sizes, params, fixed, objective, coordinates, initial)


def dispersion_max(
    system: System,
    sizes: Mapping[str, int],
    params: Optional[SearchParams] = None,
    fixed: Optional[Mapping[str, object]] = None,
    objective: Objective = Objective.DISPERSION,
    coordinates: Optional[Sequence[str]] = None,
) -> SearchResult:
    """
    Maximises the dispersion image, or a projection count for reduced dispersion systems
    """
    if objective == Objective.SOLUTIONS:
        raise ParameterError("dispersion_max optimises images, not solution counts")
    if objective == Objective.DISPERSION and not system.outputs:
        raise ParameterError("dispersion_max needs a system with output terms")
    return maximize(system, sizes, params, objective, coordinates, fixed)
