"""
Brute-force finite model checks: direct enumeration of first-order structures, and model search
on compiled systems with the Boolean symbols pinned.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Optional

import numpy as np

from termcode.exceptions import BudgetError, ParameterError
from termcode.fo.compiler import CompileOutput
from termcode.fo.formulas import (
    And,
    Equals,
    Exists,
    FOProblem,
    Forall,
    Formula,
    Implies,
    Not,
    Or,
    Pred,
)
from termcode.ir.terms import Term, Var
from termcode.search.models import find_model
from termcode.semantics.Interpretation import Interpretation
from termcode.utilities.system import get_budget

logger = logging.getLogger(__name__)


@dataclass
class Structure:
    """
    A finite first-order structure

    Attributes
    ----------
    sizes
        Domain size per sort

    relations
        Boolean table per relation symbol

    functions
        Value table per function symbol
    """

    sizes: Dict[str, int]
    relations: Dict[str, np.ndarray]
    functions: Dict[str, np.ndarray]

    def value(self, term: Term, env: Mapping[str, int]) -> int:
        if isinstance(term, Var):
            return env[term.name]
        args = tuple(self.value(arg, env) for arg in term.args)
        return int(self.functions[term.func][args])

    def satisfies(self, formula: Formula, env: Optional[Dict[str, int]] = None) -> bool:
        env = env or {}
        if isinstance(formula, Pred):
            args = tuple(self.value(arg, env) for arg in formula.args)
            return bool(self.relations[formula.name][args])
        if isinstance(formula, Equals):
            return self.value(formula.lhs, env) == self.value(formula.rhs, env)
        if isinstance(formula, Not):
            return not self.satisfies(formula.body, env)
        if isinstance(formula, And):
            return self.satisfies(formula.left, env) and self.satisfies(formula.right, env)
        if isinstance(formula, Or):
            return self.satisfies(formula.left, env) or self.satisfies(formula.right, env)
        if isinstance(formula, Implies):
            return not self.satisfies(formula.left, env) or self.satisfies(formula.right, env)

        check = all if isinstance(formula, Forall) else any
        return check(
            self.satisfies(formula.body, {**env, formula.var: value})
            for value in range(self.sizes[formula.sort])
        )


def _shapes(problem: FOProblem, sizes: Mapping[str, int]):
    signature = problem.signature
    relations = {
        name: tuple(sizes[sort] for sort in args) for name, args in signature.relations.items()
    }
    functions = {
        name: (tuple(sizes[sort] for sort in func.arg_sorts), sizes[func.result_sort])
        for name, func in signature.functions.items()
    }
    return relations, functions


def structure_count(problem: FOProblem, sizes: Mapping[str, int]) -> int:
    relations, functions = _shapes(problem, sizes)
    count = 1
    for shape in relations.values():
        count *= 2 ** math.prod(shape)
    for shape, radix in functions.values():
        count *= radix ** math.prod(shape)
    return count


def iter_structures(problem: FOProblem, sizes: Mapping[str, int]) -> Iterator[Structure]:
    """Every structure with the given domain sizes, relations before functions"""
    relations, functions = _shapes(problem, sizes)
    slots = [(name, shape, 2, True) for name, shape in relations.items()]
    slots += [(name, shape, radix, False) for name, (shape, radix) in functions.items()]
    choices = [
        itertools.product(range(radix), repeat=math.prod(shape)) for _, shape, radix, _ in slots
    ]
    for combination in itertools.product(*choices):
        structure = Structure(dict(sizes), {}, {})
        for (name, shape, _, is_relation), values in zip(slots, combination):
            table = np.array(values, dtype=np.int64).reshape(shape)
            if is_relation:
                structure.relations[name] = table.astype(bool)
            else:
                structure.functions[name] = table
        yield structure


def find_structure(problem: FOProblem, n: int) -> Optional[Structure]:
    """
    A structure of size n in every sort satisfying the sentence, or None

    Raises
    ------
    BudgetError
        When there are more candidate structures than the enumeration budget
    """
    if n < 1:
        raise ParameterError("First-order structures have non-empty domains")
    sizes = {sort: n for sort in problem.signature.sorts}
    count = structure_count(problem, sizes)
    budget = get_budget()
    if count > budget:
        raise BudgetError(f"{count} candidate structures exceed the budget of {budget}")
    for structure in iter_structures(problem, sizes):
        if structure.satisfies(problem.sentence):
            return structure
    return None


def has_model(problem: FOProblem, n: int) -> bool:
    return find_structure(problem, n) is not None


def has_model_up_to(problem: FOProblem, n: int) -> bool:
    """Whether the sentence has a model whose sorts all share one size m with 1 <= m <= n"""
    return any(has_model(problem, m) for m in range(1, n + 1))


def compiled_model(output: CompileOutput, n: int) -> Optional[Interpretation]:
    """
    A model of a compiled system with object sorts of size n and the standard Boolean tables,
    under which every assignment is a solution
    """
    if n < 1:
        raise ParameterError("Compiled systems need object sorts of size >= 1")
    sizes = output.sizes(n)
    model = find_model(output.system, sizes, fixed=output.fixed_tables)
    logger.debug("compiled model at n = %d: %s", n, "found" if model is not None else "none")
    return model


def compiled_has_model(output: CompileOutput, n: int) -> bool:
    return compiled_model(output, n) is not None
