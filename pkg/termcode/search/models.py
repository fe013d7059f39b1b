"""
Search for interpretations under which every assignment is a solution.
"""
import logging
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np
from tqdm import tqdm

from termcode.exceptions import BudgetError
from termcode.ir.System import Constraint, System
from termcode.ir.terms import App, Var, iter_subterms
from termcode.search.space import TableSpace
from termcode.semantics.counting import Evaluator, count_solutions
from termcode.semantics.Interpretation import Interpretation
from termcode.utilities.system import get_budget

logger = logging.getLogger(__name__)


def decoder_symbols(system: System, fixed: Optional[Mapping[str, object]] = None) -> List[str]:
    """
    Symbols whose every occurrence is the head of an equation h(t_1, ..., t_k) = x with a
    variable x on the other side and no decoder inside the arguments. Their tables can be
    derived from the other symbols instead of enumerated.
    """
    fixed = fixed or {}
    heads: Dict[str, int] = {}
    for equation in system.equations:
        for lhs, rhs in ((equation.lhs, equation.rhs), (equation.rhs, equation.lhs)):
            if isinstance(lhs, App) and lhs.args and isinstance(rhs, Var):
                heads[lhs.func] = heads.get(lhs.func, 0) + 1
                break

    occurrences: Dict[str, int] = {}
    for term in system.iter_terms():
        for subterm in iter_subterms(term):
            if isinstance(subterm, App):
                occurrences[subterm.func] = occurrences.get(subterm.func, 0) + 1

    return [
        name
        for name in system.func_names
        if name not in fixed and heads.get(name, 0) and heads[name] == occurrences.get(name, 0)
    ]


def _split_constraints(
    system: System, decoders: List[str]
) -> Tuple[List[Constraint], Dict[str, List[Tuple[App, Var]]]]:
    plain: List[Constraint] = []
    decoding: Dict[str, List[Tuple[App, Var]]] = {name: [] for name in decoders}
    for constraint in system.constraints:
        if constraint.kind == "eq":
            lhs, rhs = constraint.lhs, constraint.rhs
            if isinstance(lhs, App) and lhs.func in decoding and isinstance(rhs, Var):
                decoding[lhs.func].append((lhs, rhs))
                continue
            if isinstance(rhs, App) and rhs.func in decoding and isinstance(lhs, Var):
                decoding[rhs.func].append((rhs, lhs))
                continue
        plain.append(constraint)
    return plain, decoding


def find_model(
    system: System,
    sizes: Mapping[str, int],
    fixed: Optional[Mapping[str, object]] = None,
    show_progress: bool = False,
) -> Optional[Interpretation]:
    """
    Finds an interpretation satisfying every constraint at every assignment, or proves there
    is none.

    Decoder symbols are not enumerated: for each candidate interpretation of the other symbols
    the decoder equations must send equal arguments to equal variables, which determines the
    decoder tables on every reachable argument tuple. Unreached entries are set to 0.

    Returns
    -------
    The first model in enumeration order, or None when no model exists

    Raises
    ------
    BudgetError
        When enumerating the non-decoder symbols exceeds the budget
    """
    decoders = decoder_symbols(system, fixed)
    space = TableSpace(system, sizes, fixed, exclude=decoders)
    budget = get_budget()
    if space.work() > budget:
        raise BudgetError(
            f"Model search would enumerate {space.size} interpretations, over the budget of {budget}"
        )
    logger.debug("model search: %d candidates, derived decoders %s", space.size, decoders)

    evaluator = Evaluator(system, space.sizes)
    plain, decoding = _split_constraints(system, decoders)
    batch = evaluator.batch_size()
    values = evaluator.assignment_block(0, evaluator.assignments)
    length = evaluator.assignments

    with tqdm(total=space.size, disable=not show_progress, desc="Searching models") as progress:
        for chunk_start in range(0, space.size, batch):
            indices = np.arange(chunk_start, min(space.size, chunk_start + batch), dtype=np.int64)
            tables = space.decode(indices)
            cache: Dict = {}
            mask = evaluator.satisfied(plain, tables, values, len(indices), length, cache)
            candidates = mask.all(axis=1)

            derived = {}
            for name, uses in decoding.items():
                table, consistent = _derive_decoder(
                    space, evaluator, name, uses, tables, values, cache, len(indices)
                )
                candidates &= consistent
                derived[name] = table
            progress.update(len(indices))

            for row in np.flatnonzero(candidates):
                interpretation = space.unbatch(tables, int(row))
                interpretation = interpretation.with_tables(
                    **{name: table[row] for name, table in derived.items()}
                )
                interpretation = interpretation.restricted_to(system)
                if count_solutions(system, interpretation, sample_cap=0).count == evaluator.assignments:
                    return interpretation

    return None


def _derive_decoder(
    space: TableSpace,
    evaluator: Evaluator,
    name: str,
    uses: List[Tuple[App, Var]],
    tables: Dict[str, np.ndarray],
    values: Dict[str, np.ndarray],
    cache: Dict,
    batch: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Decoder table per batch row, and whether every use agreed on every argument tuple
    """
    shape = space.shapes[name]
    cells = int(np.prod(shape, dtype=np.int64))
    length = evaluator.assignments
    rows = np.repeat(np.arange(batch), length)

    keys_list, targets_list = [], []
    for application, target in uses:
        args = [
            np.broadcast_to(evaluator.evaluate(arg, tables, values, cache), (batch, length))
            for arg in application.args
        ]
        keys_list.append(np.ravel_multi_index(args, shape).reshape(-1))
        targets_list.append(np.broadcast_to(values[target.name], (batch, length)).reshape(-1))

    keys = np.concatenate(keys_list)
    targets = np.concatenate(targets_list)
    all_rows = np.tile(rows, len(uses))

    upper = np.full((batch, cells), -1, dtype=np.int64)
    lower = np.full((batch, cells), np.iinfo(np.int64).max, dtype=np.int64)
    np.maximum.at(upper, (all_rows, keys), targets)
    np.minimum.at(lower, (all_rows, keys), targets)

    reached = upper >= 0
    consistent = np.all(~reached | (upper == lower), axis=1)
    table = np.where(reached, upper, 0).reshape((batch,) + shape)
    return table, consistent
