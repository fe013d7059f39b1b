"""
Exact two-phase simplex over the rationals.

Rows of the tableau are kept sparse (column -> Fraction) and Bland's rule picks both the
entering column (lowest index with positive reduced cost) and the leaving row (minimum ratio,
lowest basic column on ties), so pivoting never cycles and results are reproducible.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Row = Dict[int, Fraction]


class Sense(str, Enum):
    LE = "<="
    GE = ">="
    EQ = "="


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class LinearConstraint:
    coefficients: Mapping[int, Fraction]
    sense: Sense
    rhs: Fraction


@dataclass
class LPSolution:
    """
    Attributes
    ----------
    status
        Optimal, infeasible or unbounded

    value
        Optimal objective value, None unless optimal

    values
        Optimal value of every structural variable
    """

    status: LPStatus
    value: Optional[Fraction] = None
    values: List[Fraction] = field(default_factory=list)


class _Tableau:
    def __init__(self, rows: List[Row], rhs: List[Fraction], basis: List[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.objective: Row = {}
        self.value = Fraction(0)
        self.pivots = 0

    def set_objective(self, costs: Mapping[int, Fraction]):
        """Reduced costs of a maximisation objective against the current basis"""
        objective: Row = {column: Fraction(cost) for column, cost in costs.items() if cost}
        value = Fraction(0)
        for row, rhs, basic in zip(self.rows, self.rhs, self.basis):
            cost = costs.get(basic, 0)
            if not cost:
                continue
            for column, coefficient in row.items():
                objective[column] = objective.get(column, Fraction(0)) - cost * coefficient
            value += cost * rhs
        self.objective = {column: entry for column, entry in objective.items() if entry}
        self.value = value

    def pivot(self, leaving: int, entering: int):
        row = self.rows[leaving]
        factor = row[entering]
        for column in row:
            row[column] /= factor
        self.rhs[leaving] /= factor

        for index, other in enumerate(self.rows):
            if index == leaving or entering not in other:
                continue
            self.rhs[index] -= other[entering] * self.rhs[leaving]
            _subtract(other, other[entering], row)

        if entering in self.objective:
            self.value += self.objective[entering] * self.rhs[leaving]
            _subtract(self.objective, self.objective[entering], row)
        self.basis[leaving] = entering
        self.pivots += 1

    def optimise(self, allowed: Optional[set] = None) -> LPStatus:
        while True:
            candidates = [
                column
                for column, cost in self.objective.items()
                if cost > 0 and (allowed is None or column in allowed)
            ]
            if not candidates:
                return LPStatus.OPTIMAL
            entering = min(candidates)

            leaving = None
            best: Optional[Tuple[Fraction, int]] = None
            for index, row in enumerate(self.rows):
                coefficient = row.get(entering)
                if coefficient is None or coefficient <= 0:
                    continue
                key = (self.rhs[index] / coefficient, self.basis[index])
                if best is None or key < best:
                    best, leaving = key, index
            if leaving is None:
                return LPStatus.UNBOUNDED
            self.pivot(leaving, entering)


def _subtract(target: Row, factor: Fraction, row: Row):
    """target -= factor * row, dropping zeros"""
    for column, coefficient in row.items():
        entry = target.get(column, Fraction(0)) - factor * coefficient
        if entry:
            target[column] = entry
        else:
            target.pop(column, None)


def lp_maximize(
    objective: Mapping[int, Fraction],
    constraints: Sequence[LinearConstraint],
    variables: int,
) -> LPSolution:
    """
    Maximises objective . x subject to the constraints and x >= 0.

    Parameters
    ----------
    objective
        Sparse cost vector over columns 0..variables-1

    constraints
        Sparse rows with a sense and a right-hand side

    variables
        Number of structural variables

    Returns
    -------
    The exact optimum and an optimal vertex
    """
    rows: List[Row] = []
    rhs: List[Fraction] = []
    basis: List[int] = []
    artificial: List[int] = []
    column = variables

    for constraint in constraints:
        row = {index: Fraction(value) for index, value in constraint.coefficients.items() if value}
        bound = Fraction(constraint.rhs)
        sense = Sense(constraint.sense)
        if bound < 0:
            row = {index: -value for index, value in row.items()}
            bound = -bound
            sense = {Sense.LE: Sense.GE, Sense.GE: Sense.LE, Sense.EQ: Sense.EQ}[sense]

        if sense == Sense.LE:
            row[column] = Fraction(1)
            basis.append(column)
            column += 1
        else:
            if sense == Sense.GE:
                row[column] = Fraction(-1)
                column += 1
            row[column] = Fraction(1)
            basis.append(column)
            artificial.append(column)
            column += 1
        rows.append(row)
        rhs.append(bound)

    tableau = _Tableau(rows, rhs, basis)
    logger.debug(
        "simplex: %d rows, %d columns, %d artificial", len(rows), column, len(artificial)
    )

    if artificial:
        tableau.set_objective({index: Fraction(-1) for index in artificial})
        tableau.optimise()
        if tableau.value < 0:
            return LPSolution(LPStatus.INFEASIBLE)
        _drive_out(tableau, set(artificial))

    allowed = set(range(column)) - set(artificial)
    tableau.set_objective({index: Fraction(value) for index, value in objective.items()})
    status = tableau.optimise(allowed)
    if status != LPStatus.OPTIMAL:
        return LPSolution(status)

    values = [Fraction(0)] * variables
    for basic, value in zip(tableau.basis, tableau.rhs):
        if basic < variables:
            values[basic] = value
    logger.debug("simplex: optimum %s after %d pivots", tableau.value, tableau.pivots)

    return LPSolution(LPStatus.OPTIMAL, tableau.value, values)


def _drive_out(tableau: _Tableau, artificial: set):
    """Pivots zero-valued artificial columns out of the basis, dropping redundant rows"""
    index = 0
    while index < len(tableau.rows):
        if tableau.basis[index] not in artificial:
            index += 1
            continue
        row = tableau.rows[index]
        replacements = sorted(column for column in row if column not in artificial)
        if replacements:
            tableau.pivot(index, replacements[0])
            index += 1
        else:
            del tableau.rows[index]
            del tableau.rhs[index]
            del tableau.basis[index]
