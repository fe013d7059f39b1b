import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from termcode.constants import DEFAULT_VERTEX_CAP
from termcode.entropy.EntropyLP import EntropyLP, check_sizes
from termcode.entropy.simplex import LPStatus
from termcode.exceptions import TermCodeError
from termcode.graph.DepGraph import DepGraph
from termcode.ir.System import DomainSizes, System
from termcode.normalization import normalize_and_diversify
from termcode.utilities.conversion import common_base, fraction_to_text

logger = logging.getLogger(__name__)


@dataclass
class BoundResult:
    """
    Attributes
    ----------
    max_joint
        Optimal h(V), in units of log2(base)

    base
        The common base the capacities are expressed in

    normalised_bound
        max_joint divided by log_base of the geometric mean of the vertex alphabet sizes

    certificate
        Optimal value of every closed vertex set
    """

    max_joint: Fraction
    base: int
    normalised_bound: Fraction
    certificate: Dict[Tuple[str, ...], Fraction] = field(default_factory=dict)

    @property
    def max_joint_entropy_bits(self) -> float:
        return float(self.max_joint) * math.log2(self.base)

    def certificate_json(self) -> Dict[str, str]:
        return {
            ",".join(subset): fraction_to_text(value)
            for subset, value in sorted(self.certificate.items())
        }


def vertex_sizes(graph: DepGraph, sizes: Mapping[str, int]) -> Dict[str, int]:
    return {vertex: int(sizes[graph.sort_of(vertex)]) for vertex in graph.vertices}


def shannon_bound(
    graph: DepGraph, sizes: Mapping[str, int], vertex_cap: int = DEFAULT_VERTEX_CAP
) -> BoundResult:
    """
    Upper bound on the guessing value of a dependency graph from the Shannon inequalities.

    With a single alphabet size n every capacity is 1 and the optimum is the normalised bound
    directly. Mixed sizes must be powers of one integer b; capacities become the exponents and
    the optimum is divided by their mean.

    Raises
    ------
    ParameterError
        For alphabets of size 1 or sizes that are not powers of a common integer

    BudgetError
        When the graph has more vertices than the cap
    """
    per_vertex = vertex_sizes(graph, sizes)
    check_sizes(per_vertex)
    if not per_vertex:
        return BoundResult(Fraction(0), 2, Fraction(0))

    distinct = set(per_vertex.values())
    if len(distinct) == 1:
        base = distinct.pop()
        exponents = {vertex: 1 for vertex in per_vertex}
    else:
        base, powers = common_base(distinct)
        exponents = {vertex: powers[size] for vertex, size in per_vertex.items()}

    program = EntropyLP.from_graph(
        graph, {vertex: Fraction(exponent) for vertex, exponent in exponents.items()}, vertex_cap
    )
    solution = program.solve()
    if solution.status != LPStatus.OPTIMAL:
        raise TermCodeError(f"Entropy program reported {solution.status.value}")

    mean_exponent = Fraction(sum(exponents.values()), len(exponents))
    result = BoundResult(
        max_joint=solution.value,
        base=base,
        normalised_bound=solution.value / mean_exponent,
        certificate=program.certificate(solution),
    )
    logger.info(
        "Shannon bound: h(V) = %s log2(%d), normalised %s",
        result.max_joint,
        base,
        result.normalised_bound,
    )
    return result


def system_bound(
    system: System,
    sizes: Optional[Mapping[str, int]] = None,
    uniform: Optional[int] = None,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> BoundResult:
    """Normalises and diversifies a system, then bounds its dependency graph"""
    diversified, _, _ = normalize_and_diversify(system)
    sizes = DomainSizes.for_system(diversified, sizes, uniform=uniform)
    return shannon_bound(DepGraph.build(diversified), sizes, vertex_cap)
