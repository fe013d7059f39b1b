"""
Known interpretations of the named examples.
"""
from typing import Dict

import numpy as np

from termcode.catalog.generators import gen
from termcode.constants import ExampleName
from termcode.exceptions import ParameterError
from termcode.ir.System import System
from termcode.normalization import normalize_and_diversify
from termcode.semantics.constructions import (
    bidirected_cycle_strategy,
    cycle_core,
    modular_interpretation,
    projection_strategy,
)
from termcode.semantics.Interpretation import Interpretation

# 0-indexed Steiner quasigroup tables; order 3 is a Steiner quasigroup, order 4 admits none
# and this table satisfies 13 of the 16 pairs
STEINER_TABLES = {
    3: [[0, 2, 1], [2, 1, 0], [1, 0, 2]],
    4: [[0, 0, 0, 0], [0, 1, 3, 2], [0, 3, 2, 1], [0, 2, 1, 3]],
}

# Idempotent self-orthogonal Latin square of order 4
SOLS_SQUARE = [[0, 2, 3, 1], [3, 1, 0, 2], [1, 3, 2, 0], [2, 0, 1, 3]]

NAND_TABLE = [[1, 1], [1, 0]]

# Core cycle of the normalised C5 system, each vertex defined from its two neighbours
C5_CYCLE = ("_a1", "x", "y", "_a2", "z")


def steiner_witness(n: int, system: System = None) -> Interpretation:
    if n not in STEINER_TABLES:
        raise ParameterError(f"No stored Steiner table of order {n}")
    system = system or gen(ExampleName.STEINER_QUASIGROUP)
    return Interpretation.for_system(system, {"A": n}, {"f": STEINER_TABLES[n]})


def is_latin_square(square) -> bool:
    square = np.asarray(square)
    n = square.shape[0]
    expected = np.arange(n)
    return all(
        np.array_equal(np.sort(square[i]), expected) and np.array_equal(np.sort(square[:, i]), expected)
        for i in range(n)
    )


def is_self_orthogonal(square) -> bool:
    """A Latin square orthogonal to its transpose: the pairs (L[x,y], L[y,x]) are all distinct"""
    square = np.asarray(square)
    n = square.shape[0]
    pairs = square * n + square.T
    return is_latin_square(square) and np.unique(pairs).size == n * n


def sols_decoders(square) -> Dict[str, np.ndarray]:
    """
    Decoder tables recovering the row and column of a self-orthogonal Latin square from
    (entry, column), (row, entry) and (entry, transposed entry)
    """
    square = np.asarray(square, dtype=np.int64)
    if not is_self_orthogonal(square):
        raise ParameterError("Square is not a self-orthogonal Latin square")
    n = square.shape[0]
    rows, columns = np.indices((n, n))
    tables = {name: np.zeros((n, n), dtype=np.int64) for name in ("h1", "h2", "h3", "h4")}
    tables["h1"][square, columns] = rows
    tables["h2"][rows, square] = columns
    tables["h3"][square, square.T] = rows
    tables["h4"][square, square.T] = columns
    return tables


def sols_witness(square=None, system: System = None) -> Interpretation:
    square = np.asarray(SOLS_SQUARE if square is None else square, dtype=np.int64)
    system = system or gen(ExampleName.SOLS)
    tables = {"f": square, **sols_decoders(square)}
    return Interpretation.for_system(system, {"A": square.shape[0]}, tables)


def network_coding_witness(n: int, system: System = None) -> Interpretation:
    """f(x,y) = x + y, h1(x,z) = z - x and h2(y,z) = z - y over Z_n"""
    system = system or gen(ExampleName.NETWORK_CODING)
    return modular_interpretation(system, n, {"f": [1, 1], "h1": [-1, 1], "h2": [-1, 1]})


def nand_witness(system: System = None) -> Interpretation:
    system = system or gen(ExampleName.NAND_DISPERSION)
    return Interpretation.for_system(system, {"Bool": 2}, {"c": 1, "S": NAND_TABLE})


def two_node_witness(n1: int, n2: int, system: System = None) -> Interpretation:
    """Embeds the smaller sort into the larger one and inverts the embedding"""
    system = system or gen(ExampleName.TWO_NODE_MULTISORT)
    f1 = np.minimum(np.arange(n2), n1 - 1)
    f2 = np.minimum(np.arange(n1), n2 - 1)
    return Interpretation.for_system(system, {"S1": n1, "S2": n2}, {"f1": f1, "f2": f2})


def unsolvable_projection_witness(n: int, diversified: System, originals) -> Interpretation:
    """
    On the diversified unsolvable system, interprets every symbol as a projection so that the
    auxiliary variables copy the first argument of their definition, z = x and w = y, and
    every other equation reads its target off the matching argument
    """
    source = {name: name for name in originals}
    choices = {}
    for equation in diversified.equations:
        target = equation.rhs.name
        if target not in source:
            choices[equation.lhs.func] = 0
            source[target] = source[equation.lhs.args[0].name]

    for equation in diversified.equations:
        if equation.lhs.func in choices:
            continue
        resolved = [source[arg.name] for arg in equation.lhs.args]
        wanted = source[equation.rhs.name]
        if wanted not in resolved:
            raise ParameterError(f"No projection satisfies {equation}")
        choices[equation.lhs.func] = resolved.index(wanted)

    return projection_strategy(diversified, {"A": n}, choices)


def c5_witness(m: int = 2):
    """
    The cycle routing strategy on the core of the diversified C5 system, over n = m * m

    Returns
    -------
    (core system, interpretation)
    """
    diversified, _, _ = normalize_and_diversify(gen(ExampleName.C5))
    core = cycle_core(diversified, C5_CYCLE)
    return core, bidirected_cycle_strategy(core, C5_CYCLE, m)
