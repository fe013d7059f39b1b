import logging
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from termcode.constants import DEFAULT_VERTEX_CAP
from termcode.entropy.simplex import LinearConstraint, LPSolution, Sense, lp_maximize
from termcode.exceptions import BudgetError, ParameterError
from termcode.graph.DepGraph import DepGraph

logger = logging.getLogger(__name__)


class EntropyLP:
    """
    Shannon-polymatroid program of a dependency graph.

    One unknown h(S) per vertex set S, restricted to sets closed under the functional
    dependencies: a vertex belongs to the closure of S once all arguments of one of its defining
    equations do, and constants belong to every closure. h(S) equals h(closure(S)) for every
    entropy vector satisfying the dependencies, so substituting closures into the elemental
    inequalities leaves the optimum unchanged and removes the equality constraints.

    Attributes
    ----------
    vertices
        Ground set in graph order

    capacities
        Upper bound on h({v}) per vertex, in units of log2 of a common base

    variables
        Closed vertex sets (bit masks) that carry an unknown, the closure of the empty set excluded

    constraints
        Deduplicated inequalities over the unknowns
    """

    vertices: List[str]
    capacities: Dict[str, Fraction]
    variables: List[int]
    constraints: List[LinearConstraint]

    def __init__(
        self,
        vertices: List[str],
        dependencies: List[Tuple[Tuple[str, ...], str]],
        capacities: Mapping[str, Fraction],
        vertex_cap: int = DEFAULT_VERTEX_CAP,
    ):
        if len(vertices) > vertex_cap:
            raise BudgetError(
                f"Entropy programs are limited to {vertex_cap} vertices, got {len(vertices)}"
            )
        self.vertices = list(vertices)
        self.capacities = {vertex: Fraction(capacities[vertex]) for vertex in self.vertices}
        bit = {vertex: 1 << position for position, vertex in enumerate(self.vertices)}
        self._dependencies = [
            (sum(bit[arg] for arg in set(args)), bit[target]) for args, target in dependencies
        ]

        self.full = (1 << len(self.vertices)) - 1
        self.empty_closure = self.closure(0)
        self._index: Dict[int, int] = {}
        self.variables = []
        self.constraints = []
        self._build()

    @classmethod
    def from_graph(
        cls,
        graph: DepGraph,
        capacities: Mapping[str, Fraction],
        vertex_cap: int = DEFAULT_VERTEX_CAP,
    ) -> "EntropyLP":
        return cls(graph.vertices, graph.equations, capacities, vertex_cap)

    def closure(self, mask: int) -> int:
        changed = True
        while changed:
            changed = False
            for required, target in self._dependencies:
                if not mask & target and required & mask == required:
                    mask |= target
                    changed = True
        return mask

    def names(self, mask: int) -> List[str]:
        return [vertex for position, vertex in enumerate(self.vertices) if mask >> position & 1]

    def _term(self, mask: int, coefficient: int, row: Dict[int, Fraction]):
        closed = self.closure(mask)
        if closed == self.empty_closure:
            return
        if closed not in self._index:
            self._index[closed] = len(self.variables)
            self.variables.append(closed)
        column = self._index[closed]
        row[column] = row.get(column, Fraction(0)) + coefficient

    def _add(self, terms: List[Tuple[int, int]], rhs: Fraction, seen: set):
        """Adds sum coefficient * h(mask) <= rhs unless it is trivial or already present"""
        row: Dict[int, Fraction] = {}
        for mask, coefficient in terms:
            self._term(mask, coefficient, row)
        row = {column: value for column, value in row.items() if value}
        if not row:
            return
        key = (tuple(sorted(row.items())), rhs)
        if key not in seen:
            seen.add(key)
            self.constraints.append(LinearConstraint(row, Sense.LE, rhs))

    def _build(self):
        seen: set = set()
        self._term(self.full, 1, {})
        count = len(self.vertices)

        for position, vertex in enumerate(self.vertices):
            self._add([(1 << position, 1)], self.capacities[vertex], seen)

        # h(V \ {i}) - h(V) <= 0
        for position in range(count):
            self._add([(self.full & ~(1 << position), 1), (self.full, -1)], Fraction(0), seen)

        # h(S + ij) + h(S) - h(S + i) - h(S + j) <= 0
        for first in range(count):
            for second in range(first + 1, count):
                pair = (1 << first) | (1 << second)
                rest = self.full & ~pair
                subset = rest
                while True:
                    self._add(
                        [
                            (subset | pair, 1),
                            (subset, 1),
                            (subset | 1 << first, -1),
                            (subset | 1 << second, -1),
                        ],
                        Fraction(0),
                        seen,
                    )
                    if subset == 0:
                        break
                    subset = (subset - 1) & rest

        logger.debug(
            "entropy program: %d vertices, %d closed sets, %d inequalities",
            count,
            len(self.variables),
            len(self.constraints),
        )

    def solve(self) -> LPSolution:
        """Maximises h(V)"""
        objective = {}
        closed = self.closure(self.full)
        if closed != self.empty_closure:
            objective[self._index[closed]] = Fraction(1)
        return lp_maximize(objective, self.constraints, len(self.variables))

    def certificate(self, solution: LPSolution) -> Dict[Tuple[str, ...], Fraction]:
        """Optimal h value per closed set, keyed by its sorted vertex names"""
        return {
            tuple(sorted(self.names(mask))): solution.values[column]
            for column, mask in enumerate(self.variables)
        }


def uniform_capacities(vertices: List[str]) -> Dict[str, Fraction]:
    return {vertex: Fraction(1) for vertex in vertices}


def check_sizes(sizes: Mapping[str, int]):
    small = sorted(vertex for vertex, size in sizes.items() if size < 2)
    if small:
        raise ParameterError(f"Entropy bounds need alphabets of size >= 2, not for {small}")
