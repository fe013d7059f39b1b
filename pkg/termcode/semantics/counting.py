"""
Vectorised evaluation of systems over every variable assignment.

Assignments are enumerated in declaration order with the last declared variable varying
fastest. A batch of B interpretations is evaluated at once: every table is stacked along a
leading batch axis, so a term evaluates to an array of shape (B, L) over a block of L
assignments through numpy fancy indexing.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from termcode.constants import DEFAULT_SAMPLE_CAP, EVALUATION_CELLS, Objective
from termcode.exceptions import ParameterError
from termcode.ir.System import Constraint, DomainSizes, System
from termcode.ir.terms import Term, Var
from termcode.ir.validation import term_sort
from termcode.semantics.Interpretation import Interpretation

logger = logging.getLogger(__name__)

# Mixed-radix image codes must stay clear of int64 overflow
MAX_CODE_SPACE = 2**62


@dataclass
class SolutionReport:
    """
    Attributes
    ----------
    count
        Number of satisfying assignments

    sample
        The first satisfying assignments in enumeration order, as value tuples in variable
        declaration order

    witness_hash
        Digest of the interpretation that was counted
    """

    count: int
    sample: List[Tuple[int, ...]] = field(default_factory=list)
    witness_hash: str = ""


def stack_tables(system: System, interpretations: Sequence[Interpretation]) -> Dict[str, np.ndarray]:
    """Stacks the tables of several interpretations along a leading batch axis"""
    return {
        func.name: np.stack([interpretation.tables[func.name] for interpretation in interpretations])
        for func in system.funcs
    }


class Evaluator:
    """
    Evaluates the terms and constraints of one system for batches of interpretations.

    Attributes
    ----------
    system
        The system being evaluated

    sizes
        Domain sizes of its sorts

    shape
        Domain size per variable, in declaration order

    assignments
        Total number of variable assignments
    """

    system: System
    sizes: DomainSizes
    shape: Tuple[int, ...]
    assignments: int

    def __init__(
        self, system: System, sizes: Mapping[str, int], cell_limit: int = EVALUATION_CELLS
    ):
        self.system = system
        self.sizes = DomainSizes.for_system(system, sizes)
        self.cell_limit = cell_limit
        self.shape = tuple(self.sizes.var_size(system, var) for var in system.var_names)
        self.assignments = math.prod(self.shape)

    def batch_size(self) -> int:
        """Interpretations per batch when a full assignment sweep must fit in memory"""
        return max(1, self.cell_limit // max(1, self.assignments))

    def assignment_block(self, start: int, stop: int) -> Dict[str, np.ndarray]:
        """Variable values for assignments start..stop-1, each of shape (1, stop - start)"""
        if not self.shape:
            return {}
        coordinates = np.unravel_index(np.arange(start, stop, dtype=np.int64), self.shape)
        return {
            var: values[None, :]
            for var, values in zip(self.system.var_names, coordinates)
        }

    def iter_blocks(self, block_length: int) -> Iterator[Tuple[int, int, Dict[str, np.ndarray]]]:
        block_length = max(1, block_length)
        for start in range(0, self.assignments, block_length):
            stop = min(self.assignments, start + block_length)
            yield start, stop, self.assignment_block(start, stop)

    def evaluate(
        self,
        term: Term,
        tables: Mapping[str, np.ndarray],
        values: Mapping[str, np.ndarray],
        cache: Dict[Term, np.ndarray],
    ) -> np.ndarray:
        """
        Evaluates a term on a block of assignments.

        Returns
        -------
        An integer array broadcastable to (B, L); shared subterms are computed once per cache
        """
        result = cache.get(term)
        if result is not None:
            return result

        if isinstance(term, Var):
            result = values[term.name] if self.shape else np.zeros((1, 1), dtype=np.int64)
        else:
            table = tables[term.func]
            rows = np.arange(table.shape[0])[:, None]
            if not term.args:
                result = table[:, None]
            else:
                args = tuple(self.evaluate(arg, tables, values, cache) for arg in term.args)
                result = table[(rows,) + args]

        cache[term] = result
        return result

    def satisfied(
        self,
        constraints: Sequence[Constraint],
        tables: Mapping[str, np.ndarray],
        values: Mapping[str, np.ndarray],
        batch: int,
        length: int,
        cache: Optional[Dict[Term, np.ndarray]] = None,
    ) -> np.ndarray:
        """Boolean mask of shape (B, L), true where every constraint holds"""
        cache = {} if cache is None else cache
        mask = np.ones((batch, length), dtype=bool)
        for constraint in constraints:
            lhs = self.evaluate(constraint.lhs, tables, values, cache)
            rhs = self.evaluate(constraint.rhs, tables, values, cache)
            if constraint.kind == "eq":
                mask &= lhs == rhs
            else:
                mask &= lhs != rhs
        return mask

    def count(self, tables: Mapping[str, np.ndarray], batch: int) -> np.ndarray:
        """Number of solutions per interpretation in the batch"""
        counts = np.zeros(batch, dtype=np.int64)
        block_length = max(1, self.cell_limit // batch)
        for start, stop, values in self.iter_blocks(block_length):
            mask = self.satisfied(self.system.constraints, tables, values, batch, stop - start)
            counts += mask.sum(axis=1)
        return counts

    def image_size(
        self, terms: Sequence[Term], tables: Mapping[str, np.ndarray], batch: int
    ) -> np.ndarray:
        """
        Number of distinct value tuples the terms take over the solutions, per interpretation
        """
        radices = [self.sizes[term_sort(term, self.system)] for term in terms]
        if math.prod(radices) >= MAX_CODE_SPACE:
            raise ParameterError("Output space too large to count distinct images")

        values = self.assignment_block(0, self.assignments)
        cache: Dict[Term, np.ndarray] = {}
        mask = self.satisfied(
            self.system.constraints, tables, values, batch, self.assignments, cache
        )
        codes = np.zeros((batch, self.assignments), dtype=np.int64)
        for term, radix in zip(terms, radices):
            codes = codes * radix + self.evaluate(term, tables, values, cache)
        codes = np.where(mask, codes, -1)

        ordered = np.sort(codes, axis=1)
        valid = ordered >= 0
        fresh = valid.copy()
        fresh[:, 1:] &= ordered[:, 1:] != ordered[:, :-1]
        return fresh.sum(axis=1)

    def scores(
        self,
        tables: Mapping[str, np.ndarray],
        batch: int,
        objective: Objective = Objective.SOLUTIONS,
        coordinates: Optional[Sequence[str]] = None,
    ) -> np.ndarray:
        """
        Objective value per interpretation in the batch: solution count, dispersion image
        size, or the number of distinct projections onto the coordinate variables
        """
        if objective == Objective.SOLUTIONS:
            return self.count(tables, batch)
        if objective == Objective.DISPERSION:
            if not self.system.outputs:
                raise ParameterError("Dispersion needs output terms")
            return self.image_size(self.system.outputs, tables, batch)
        if not coordinates:
            raise ParameterError("Projection needs at least one coordinate variable")
        return self.image_size([Var(name) for name in coordinates], tables, batch)

    def upper_bound(
        self, objective: Objective = Objective.SOLUTIONS, coordinates: Optional[Sequence[str]] = None
    ) -> int:
        """The trivial maximum of an objective, reached by no interpretation of a non-trivial system"""
        if objective == Objective.SOLUTIONS:
            return self.assignments
        if objective == Objective.DISPERSION:
            terms = self.system.outputs
        else:
            terms = [Var(name) for name in coordinates or ()]
        outputs = math.prod(self.sizes[term_sort(term, self.system)] for term in terms)
        return min(self.assignments, outputs)


def eval_term(term: Term, interpretation: Interpretation, assignment: Mapping[str, int]) -> int:
    """
    Evaluates a single term under one interpretation and one assignment.

    Raises
    ------
    ParameterError
        When the assignment misses a variable of the term or a table is missing
    """
    if isinstance(term, Var):
        if term.name not in assignment:
            raise ParameterError(f"Assignment has no value for variable '{term.name}'")
        return int(assignment[term.name])

    if term.func not in interpretation.tables:
        raise ParameterError(f"No table for function symbol '{term.func}'")
    args = tuple(eval_term(arg, interpretation, assignment) for arg in term.args)
    try:
        return int(interpretation.tables[term.func][args])
    except IndexError:
        raise ParameterError(f"Arguments {args} are outside the domain of '{term.func}'")


def objective_value(
    system: System,
    interpretation: Interpretation,
    objective: Objective = Objective.SOLUTIONS,
    coordinates: Optional[Sequence[str]] = None,
) -> int:
    evaluator = Evaluator(system, interpretation.sizes)
    tables = stack_tables(system, [interpretation])
    return int(evaluator.scores(tables, 1, objective, coordinates)[0])


def count_solutions(
    system: System, interpretation: Interpretation, sample_cap: int = DEFAULT_SAMPLE_CAP
) -> SolutionReport:
    """
    Counts the assignments satisfying every equation and disequality.

    Parameters
    ----------
    system
        A valid system

    interpretation
        A total interpretation of its symbols

    sample_cap
        Maximum number of solutions reported in the sample

    Returns
    -------
    The count, a sample of solutions and the interpretation digest
    """
    interpretation.validate(system)
    evaluator = Evaluator(system, interpretation.sizes)
    tables = stack_tables(system, [interpretation])

    report = SolutionReport(0, [], interpretation.digest(system))
    for start, stop, values in evaluator.iter_blocks(evaluator.cell_limit):
        mask = evaluator.satisfied(system.constraints, tables, values, 1, stop - start)[0]
        hits = np.flatnonzero(mask)
        report.count += int(hits.size)
        missing = sample_cap - len(report.sample)
        if missing > 0 and hits.size:
            chosen = hits[:missing] + start
            if evaluator.shape:
                columns = np.unravel_index(chosen, evaluator.shape)
                report.sample.extend(tuple(int(value) for value in row) for row in zip(*columns))
            else:
                report.sample.extend(() for _ in chosen)

    logger.debug("counted %d solutions of %d assignments", report.count, evaluator.assignments)
    return report


def dispersion_image(system: System, interpretation: Interpretation) -> int:
    """
    Number of distinct output tuples over all assignments satisfying the constraints
    """
    if not system.outputs:
        raise ParameterError("dispersion_image needs a system with output terms")
    interpretation.validate(system)
    return objective_value(system, interpretation, Objective.DISPERSION)


def projection_count(
    system: System, interpretation: Interpretation, coordinates: Sequence[str]
) -> int:
    """Number of distinct projections of the solution set onto some variables"""
    unknown = [name for name in coordinates if name not in system.var_sorts]
    if unknown:
        raise ParameterError(f"Unknown projection variables {unknown}")
    interpretation.validate(system)
    return objective_value(system, interpretation, Objective.PROJECTION, coordinates)


def verify_witness(system: System, interpretation: Interpretation, claimed: int) -> bool:
    """
    Recounts from scratch; true iff the witness reaches exactly the claimed value
    """
    if system.outputs:
        return dispersion_image(system, interpretation) == claimed
    return count_solutions(system, interpretation, sample_cap=0).count == claimed
