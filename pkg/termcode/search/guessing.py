import logging
import math
from dataclasses import dataclass
from typing import Mapping, Optional

from termcode.exceptions import ParameterError
from termcode.ir.System import DomainSizes, System
from termcode.normalization import SymbolMap, normalize_and_diversify
from termcode.search.maximize import maximize
from termcode.search.SearchParams import SearchParams
from termcode.semantics.Interpretation import Interpretation

logger = logging.getLogger(__name__)


@dataclass
class GuessResult:
    """
    Attributes
    ----------
    value
        log base M of the best diversified count, -inf when no interpretation has a solution

    count
        Best diversified solution count found

    exact
        Whether count is the proven maximum

    base
        M, the geometric mean of the variables' alphabet sizes

    witness
        Interpretation of the diversified system reaching count

    diversified
        The normalised, diversified system that was searched
    """

    value: float
    count: int
    exact: bool
    base: float
    witness: Interpretation
    diversified: System


def transport(
    interpretation: Interpretation, diversified: System, symbol_map: SymbolMap
) -> Interpretation:
    """
    Moves an interpretation of a flat system onto its diversification: every fresh symbol
    copies the table of the symbol it was split from
    """
    tables = {}
    for func in diversified.funcs:
        source = symbol_map.original(func.name) if func.name in symbol_map.symbols else func.name
        if source not in interpretation.tables:
            raise ParameterError(f"Initial interpretation has no table for '{source}'")
        tables[func.name] = interpretation.tables[source]

    return Interpretation.for_system(diversified, interpretation.sizes, tables)


def guess_at_sizes(
    system: System,
    sizes: Mapping[str, int],
    params: Optional[SearchParams] = None,
    initial: Optional[Interpretation] = None,
) -> GuessResult:
    """
    Guessing value of a system at given sort sizes.

    The system is normalised and diversified, the diversified count is maximised, and the
    result is expressed as a logarithm in base M, the geometric mean of the alphabet sizes of
    the diversified variables. With a single size n this is log_n of the maximal count.

    Parameters
    ----------
    initial
        Optional warm start, an interpretation of the system's symbols at these sizes
    """
    diversified, _, symbol_map = normalize_and_diversify(system)
    sizes = DomainSizes.for_system(diversified, sizes)
    logs = [math.log(sizes.var_size(diversified, var)) for var in diversified.var_names]
    if not logs or sum(logs) == 0:
        raise ParameterError("Guessing values need variables over alphabets of size >= 2")
    log_base = sum(logs) / len(logs)

    warm_start = transport(initial, diversified, symbol_map) if initial is not None else None
    result = maximize(diversified, sizes, params, initial=warm_start)

    value = math.log(result.best_count) / log_base if result.best_count > 0 else float("-inf")
    logger.info("guessing value %.6f from count %d", value, result.best_count)

    return GuessResult(
        value=value,
        count=result.best_count,
        exact=result.exhausted,
        base=math.exp(log_base),
        witness=result.witness,
        diversified=diversified,
    )


def guess_at_n(
    system: System,
    n: int,
    params: Optional[SearchParams] = None,
    initial: Optional[Interpretation] = None,
) -> GuessResult:
    """
    Normalised guessing number at a uniform alphabet size n >= 2
    """
    if n < 2:
        raise ParameterError("guess_at_n needs n >= 2")
    return guess_at_sizes(system, DomainSizes.for_system(system, uniform=n), params, initial)
