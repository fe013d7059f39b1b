import logging
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from termcode.exceptions import ParameterError
from termcode.ir.System import Constraint, FuncSymbol, System, VarDecl
from termcode.ir.terms import App, Var
from termcode.ir.validation import term_sort
from termcode.semantics.counting import Evaluator, stack_tables
from termcode.semantics.Interpretation import Interpretation, table_shape
from termcode.utilities.general import fresh_name

logger = logging.getLogger(__name__)


@dataclass
class Reduction:
    """
    A dispersion system rewritten as a term coding system.

    Attributes
    ----------
    system
        The term coding system: y_i = t_i for every output and x_j = h_j(y_1, ..., y_s) for every
        input variable

    projection
        The fresh y variables; distinct projections of solutions onto them are image tuples

    decoders
        Fresh decoder symbol per input variable
    """

    system: System
    projection: List[str]
    decoders: Dict[str, str]


def reduce_to_termcoding(system: System) -> Reduction:
    """
    Rewrites a dispersion problem so that its image size becomes a projection count.

    Output terms get fresh variables y_i, every input variable x_j gets a fresh decoder
    h_j(y_1, ..., y_s) = x_j. Disequalities between output terms move onto the y variables,
    other disequalities are kept. Outputs are cleared.
    """
    if not system.outputs:
        raise ParameterError("reduce_to_termcoding needs a system with output terms")

    taken = system.names()
    outputs: Dict = {}
    projection: List[str] = []
    variables = list(system.vars)
    equations = list(system.equations)
    for index, term in enumerate(system.outputs, start=1):
        name = fresh_name(f"y{index}", taken)
        taken.add(name)
        projection.append(name)
        outputs.setdefault(term, name)
        variables.append(VarDecl(name, term_sort(term, system)))
        equations.append(Constraint.eq(Var(name), term))

    output_sorts = tuple(term_sort(term, system) for term in system.outputs)
    funcs = list(system.funcs)
    decoders = {}
    for index, var in enumerate(system.vars, start=1):
        name = fresh_name(f"h{index}", taken)
        taken.add(name)
        decoders[var.name] = name
        funcs.append(FuncSymbol(name, output_sorts, var.sort))
        equations.append(
            Constraint.eq(Var(var.name), App(name, tuple(Var(y) for y in projection)))
        )

    disequalities = []
    for neq in system.disequalities:
        if neq.lhs in outputs and neq.rhs in outputs:
            disequalities.append(Constraint.neq(Var(outputs[neq.lhs]), Var(outputs[neq.rhs])))
        else:
            disequalities.append(neq)

    reduced = system.evolve(
        funcs=tuple(funcs),
        vars=tuple(variables),
        equations=tuple(equations),
        disequalities=tuple(disequalities),
        outputs=(),
    )
    logger.debug(
        "reduced %d outputs and %d inputs to %d equations",
        len(projection),
        len(decoders),
        len(equations),
    )
    return Reduction(reduced, projection, decoders)


def lift_decoders(
    reduction: Reduction, system: System, witness: Interpretation
) -> Interpretation:
    """
    Extends a dispersion witness to the reduced system: each decoder maps an image tuple to the
    first valid input, in enumeration order, producing it. Unreached decoder entries are 0.
    """
    witness.validate(system)
    evaluator = Evaluator(system, witness.sizes)
    tables = stack_tables(system, [witness])
    values = evaluator.assignment_block(0, evaluator.assignments)
    cache: Dict = {}
    mask = evaluator.satisfied(
        system.constraints, tables, values, 1, evaluator.assignments, cache
    )[0]

    images = [
        np.broadcast_to(
            evaluator.evaluate(term, tables, values, cache), (1, evaluator.assignments)
        )[0]
        for term in system.outputs
    ]
    radices = [witness.sizes[term_sort(term, system)] for term in system.outputs]
    codes = np.ravel_multi_index(images, radices)
    valid = np.flatnonzero(mask)
    _, first = np.unique(codes[valid], return_index=True)
    chosen = valid[first]

    decoders = {}
    for func in reduction.system.funcs:
        if func.name not in reduction.decoders.values():
            continue
        decoders[func.name] = np.zeros(table_shape(func, witness.sizes), dtype=np.int64)
    image_index = tuple(image[chosen] for image in images)
    for var, decoder in reduction.decoders.items():
        decoders[decoder][image_index] = values[var][0][chosen]

    return Interpretation.for_system(
        reduction.system, witness.sizes, {**witness.tables, **decoders}
    )
