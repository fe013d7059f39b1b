"""
Interpretation combinators that build large witnesses from small ones.
"""
import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from termcode.exceptions import ParameterError
from termcode.ir.System import DomainSizes, System
from termcode.normalization import SymbolMap, VarMap, is_flat
from termcode.semantics.Interpretation import Interpretation, table_shape

logger = logging.getLogger(__name__)


def product(system: System, first: Interpretation, second: Interpretation) -> Interpretation:
    """
    Componentwise product of two interpretations of the same system.

    The pair (i, j) of sort s is encoded as i * |second_s| + j, so a solution of each factor
    combines into a solution of the product and counts multiply at least.
    """
    first.validate(system)
    second.validate(system)
    sizes = DomainSizes(
        {sort: first.sizes[sort] * second.sizes[sort] for sort in system.sort_names}
    )

    tables = {}
    for func in system.funcs:
        shape = table_shape(func, sizes)
        result_radix = second.sizes[func.result_sort]
        if not shape:
            tables[func.name] = (
                first.tables[func.name] * result_radix + second.tables[func.name]
            )
            continue

        indices = np.indices(shape)
        radices = [second.sizes[sort] for sort in func.arg_sorts]
        left = tuple(axis // radix for axis, radix in zip(indices, radices))
        right = tuple(axis % radix for axis, radix in zip(indices, radices))
        tables[func.name] = (
            first.tables[func.name][left] * result_radix + second.tables[func.name][right]
        )

    return Interpretation.for_system(system, sizes, tables)


def block_offsets(diversified: System, sizes: Mapping[str, int]) -> Tuple[Dict[str, int], DomainSizes]:
    """
    Assigns every variable of a diversified system its own block of its sort's domain.

    Returns
    -------
    Block offset per variable, and the enlarged sizes k_s * m_s for k_s variables of sort s
    """
    offsets = {}
    used: Dict[str, int] = {sort: 0 for sort in diversified.sort_names}
    for var in diversified.vars:
        offsets[var.name] = used[var.sort] * sizes[var.sort]
        used[var.sort] += 1

    enlarged = DomainSizes(
        {sort: max(used[sort], 1) * sizes[sort] for sort in diversified.sort_names}
    )
    return offsets, enlarged


def _check_var_map(base: System, var_map: VarMap):
    """Raises ParameterError unless var_map describes the normalisation that produced base"""
    declared = set(base.var_names)
    for aux in var_map.aux:
        if aux not in declared:
            raise ParameterError(f"Auxiliary variable '{aux}' is not a variable of the base system")
    for removed, kept in var_map.merged.items():
        if removed in declared or kept not in declared:
            raise ParameterError(
                f"Merge of '{removed}' into '{kept}' does not match the base system"
            )


def partition_lift(
    diversified: System,
    witness: Interpretation,
    base: System,
    symbol_map: SymbolMap,
    var_map: Optional[VarMap] = None,
) -> Interpretation:
    """
    Turns an interpretation of a diversified system into one of the flat system it came from.

    Every variable gets a private block of m_s values, so the equations that diversification
    pulled apart land on disjoint regions of the shared tables. Cells outside every block
    are set to 0.

    Parameters
    ----------
    diversified
        Output of diversify(base)

    witness
        An interpretation of the diversified system over sizes m_s

    base
        The flat system that was diversified

    symbol_map
        The map returned by diversify

    var_map
        The map returned by normalize, checked against base when given. The lifted tables
        interpret the unnormalised system too, since normalisation keeps every symbol

    Returns
    -------
    An interpretation of base over sizes k_s * m_s with at least the witness's solution count
    """
    if not is_flat(base):
        raise ParameterError("partition_lift expects the flat system that was diversified")
    if var_map is not None:
        _check_var_map(base, var_map)
    witness.validate(diversified)

    offsets, sizes = block_offsets(diversified, witness.sizes)
    tables = {
        func.name: np.zeros(table_shape(func, sizes), dtype=np.int64) for func in base.funcs
    }
    for equation in diversified.equations:
        symbol = equation.lhs.func
        if symbol not in symbol_map.symbols:
            raise ParameterError(f"'{symbol}' is missing from the symbol map")
        original = symbol_map.original(symbol)
        if original not in tables:
            raise ParameterError(f"'{original}' is not a symbol of the base system")

        region = tuple(
            slice(offsets[arg.name], offsets[arg.name] + witness.sizes[diversified.var_sorts[arg.name]])
            for arg in equation.lhs.args
        )
        tables[original][region] = offsets[equation.rhs.name] + witness.tables[symbol]

    logger.debug("lifted %d diversified equations into sizes %s", len(diversified.equations), dict(sizes))
    return Interpretation.for_system(base, sizes, tables)


def lift_assignment(
    diversified: System,
    base: System,
    symbol_map: SymbolMap,
    witness_sizes: Mapping[str, int],
    values: Sequence[int],
    var_map: Optional[VarMap] = None,
    original: Optional[System] = None,
) -> Tuple[int, ...]:
    """
    Maps a solution of the diversified system to the base solution it induces under
    partition_lift, in base variable order.

    Given the normalisation's var_map and the original system, the solution is carried one
    step further, in original variable order: a merged variable takes its survivor's value
    and auxiliary variables are dropped.
    """
    offsets, _ = block_offsets(diversified, witness_sizes)
    by_name = dict(zip(diversified.var_names, values))
    lifted = []
    for name in base.var_names:
        representative = symbol_map.representative(name)
        lifted.append(offsets[representative] + int(by_name[representative]))

    if original is None:
        return tuple(lifted)
    if var_map is None:
        raise ParameterError("Lifting to the original system needs the normalisation's var_map")

    by_base_name = dict(zip(base.var_names, lifted))
    return tuple(by_base_name[var_map.representative(name)] for name in original.var_names)


def cycle_core(system: System, cycle: Sequence[str]) -> System:
    """
    The subsystem of the equations defining cycle vertices from their two cycle neighbours.
    Disequalities and output terms are dropped.
    """
    members = set(cycle)
    missing = members - set(system.var_names)
    if missing:
        raise ParameterError(f"Cycle vertices {sorted(missing)} are not variables")

    equations = tuple(
        equation
        for equation in system.equations
        if equation.rhs.name in members and {arg.name for arg in equation.lhs.args} <= members
    )
    used = {equation.lhs.func for equation in equations}
    return system.evolve(
        funcs=tuple(func for func in system.funcs if func.name in used),
        vars=tuple(var for var in system.vars if var.name in members),
        equations=equations,
        disequalities=(),
        outputs=(),
    )


def bidirected_cycle_strategy(system: System, cycle: Sequence[str], m: int) -> Interpretation:
    """
    Routing strategy on a bidirected cycle over the alphabet of pairs, n = m * m.

    The value at cycle vertex i is a pair (p_i, q_i) encoded p * m + q. Each vertex forwards the
    second half of its predecessor and the first half of its successor, (q_{i-1}, p_{i+1}),
    which leaves m ** len(cycle) codewords.
    """
    if m < 1:
        raise ParameterError("m must be >= 1")
    n = m * m
    sizes = DomainSizes.for_system(system, uniform=n)

    tables = {
        func.name: np.zeros(table_shape(func, sizes), dtype=np.int64) for func in system.funcs
    }
    length = len(cycle)
    for index, vertex in enumerate(cycle):
        previous, following = cycle[index - 1], cycle[(index + 1) % length]
        equation = _defining_equation(system, vertex, {previous, following})
        args = [arg.name for arg in equation.lhs.args]
        first, second = np.indices((n, n))
        if args[0] == previous:
            values = (first % m) * m + second // m
        else:
            values = (second % m) * m + first // m
        tables[equation.lhs.func] = values

    return Interpretation.for_system(system, sizes, tables)


def _defining_equation(system: System, vertex: str, neighbours: set):
    for equation in system.equations:
        args = [arg.name for arg in equation.lhs.args]
        if equation.rhs.name == vertex and len(args) == 2 and set(args) == neighbours:
            return equation

    raise ParameterError(
        f"No binary equation defines '{vertex}' from its cycle neighbours {sorted(neighbours)}"
    )


def projection_strategy(
    system: System, sizes: Mapping[str, int], choices: Mapping[str, int]
) -> Interpretation:
    """
    Interprets chosen symbols as projections f(a_1, ..., a_k) = a_i. Other symbols map to 0.

    Parameters
    ----------
    choices
        Symbol -> 0-based argument position it projects onto
    """
    sizes = DomainSizes.for_system(system, sizes)
    tables: Dict[str, np.ndarray] = {}
    for func in system.funcs:
        shape = table_shape(func, sizes)
        if func.name not in choices:
            tables[func.name] = np.zeros(shape, dtype=np.int64)
            continue
        position = choices[func.name]
        if not 0 <= position < func.arity:
            raise ParameterError(f"'{func.name}' has no argument {position}")
        if func.arg_sorts[position] != func.result_sort:
            raise ParameterError(
                f"Argument {position} of '{func.name}' does not have the result sort"
            )
        tables[func.name] = np.indices(shape)[position]

    return Interpretation.for_system(system, sizes, tables)


def modular_interpretation(
    system: System, n: int, coefficients: Mapping[str, List[int]]
) -> Interpretation:
    """
    Linear maps over Z_n: f(a_1, ..., a_k) = sum_i c_i * a_i mod n for every listed symbol.
    Unlisted symbols map to 0.
    """
    sizes = DomainSizes.for_system(system, uniform=n)
    tables: Dict[str, np.ndarray] = {}
    for func in system.funcs:
        shape = table_shape(func, sizes)
        weights = coefficients.get(func.name)
        if weights is None:
            tables[func.name] = np.zeros(shape, dtype=np.int64)
            continue
        if len(weights) != func.arity:
            raise ParameterError(f"'{func.name}' takes {func.arity} coefficients")
        total = np.zeros(shape, dtype=np.int64)
        for weight, axis in zip(weights, np.indices(shape)):
            total += weight * axis
        tables[func.name] = np.mod(total, n)

    return Interpretation.for_system(system, sizes, tables)
