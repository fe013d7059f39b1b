"""
Integer dispersion exponent, threshold decisions and the brute-force growth oracle.

The exact questions whether the maximal image reaches n^r for some finite n are undecidable;
only the eventual threshold comparison D >= d + 1 is decided here.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence, Tuple

from termcode.constants import Objective
from termcode.dispersion.TermDag import TermDag
from termcode.exceptions import ParameterError, VerificationError
from termcode.ir.System import DomainSizes, System
from termcode.search.maximize import dispersion_max
from termcode.search.SearchParams import SearchParams

logger = logging.getLogger(__name__)


@dataclass
class ExponentResult:
    """
    Attributes
    ----------
    D
        Maximum number of vertex-disjoint input-to-output paths

    cut
        Term nodes of a minimum vertex cut, certifying optimality

    oracle_checked
        Whether brute-force dispersion maxima were confirmed to stay within n^D

    growth
        (n, dispersion maximum, exact) rows of the oracle run
    """

    D: int
    cut: List[str]
    oracle_checked: bool = False
    growth: List[Tuple[int, int, bool]] = field(default_factory=list)


def check_disequalities(system: System):
    """Raises when a disequality compares a term with itself, which no assignment satisfies"""
    for neq in system.disequalities:
        if neq.lhs == neq.rhs:
            raise ParameterError(f"Inconsistent disequality {neq}")


def integer_exponent(
    system: System,
    oracle_sizes: Optional[Sequence[int]] = None,
    params: Optional[SearchParams] = None,
    fixed: Optional[Mapping[str, object]] = None,
) -> ExponentResult:
    """
    Dispersion exponent D by node-split max-flow on the term DAG.

    Disequalities are ignored once they are known to be consistent. When oracle_sizes are
    given, dispersion is maximised at each size and every maximum must stay within n^D.

    Raises
    ------
    VerificationError
        When the growth oracle exceeds n^D
    """
    check_disequalities(system)
    dag = TermDag(system)
    flow, cut = dag.max_flow()
    result = ExponentResult(D=flow, cut=cut)
    logger.info("dispersion exponent D = %d, cut %s", flow, cut)

    if oracle_sizes:
        result.growth = growth_oracle(system, oracle_sizes, params, fixed)
        for n, best, _ in result.growth:
            if best > n**flow:
                raise VerificationError(
                    f"Dispersion {best} at n = {n} exceeds n^D = {n ** flow}"
                )
        result.oracle_checked = True

    return result


def decide_threshold(system: System, d: int) -> bool:
    """
    True iff D >= d + 1, that is the maximal image eventually exceeds every threshold
    between n^d and o(n^(d+1))
    """
    if d < 0:
        raise ParameterError("Thresholds start at d = 0")
    return integer_exponent(system).D >= d + 1


def growth_oracle(
    system: System,
    sizes: Sequence[int],
    params: Optional[SearchParams] = None,
    fixed: Optional[Mapping[str, object]] = None,
) -> List[Tuple[int, int, bool]]:
    """
    Dispersion maxima at uniform sizes

    Returns
    -------
    (n, best image size, whether it is exact) per size
    """
    rows = []
    for n in sizes:
        result = dispersion_max(
            system, DomainSizes.for_system(system, uniform=n), params, fixed, Objective.DISPERSION
        )
        rows.append((n, result.best_count, result.exhausted))
        logger.debug("growth oracle: n = %d, dispersion %d", n, result.best_count)
    return rows


def fitted_exponents(rows: Sequence[Tuple[int, int, bool]]) -> List[float]:
    """Log ratios between consecutive oracle rows, an empirical estimate of D"""
    exponents = []
    for (n1, best1, _), (n2, best2, _) in zip(rows, rows[1:]):
        if best1 > 0 and best2 > 0 and n2 != n1:
            exponents.append(math.log(best2 / best1) / math.log(n2 / n1))
    return exponents


def single_relay_bounds(n1: int, n2: int, n3: int) -> Tuple[int, int]:
    """
    Counting bounds on the dispersion of f(x,y), f(x,z), f(w,y), f(w,z) with
    x, w of size n1, y, z of size n2 and f valued in a sort of size n3

    Returns
    -------
    (lower, upper)
    """
    distinct_inputs = n1 * (n1 - 1) * n2 * (n2 - 1)
    partition = distinct_inputs + n1 * n2 * (n2 - 1) + n1 * (n1 - 1) * n2 + n1 * n2
    lower = max(0, min(distinct_inputs, n3 * (n3 - 1) * (n3 - 2) * (n3 - 3)))
    return lower, min(n3**4, partition)
