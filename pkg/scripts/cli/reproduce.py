"""
Recomputes the tables of maxima for the named examples and prints them as CSV.
"""
import csv
import io
import math
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from scripts.cli.commands import search_params
from scripts.cli.utilities import report
from termcode.catalog import c5_witness, fixed_tables, gen
from termcode.catalog.witnesses import NAND_TABLE
from termcode.constants import ExampleName, Objective
from termcode.entropy import system_bound
from termcode.ir import DomainSizes, System
from termcode.search import SearchParams, all_maximisers, maximize
from termcode.semantics import count_solutions

TABLES = {
    "table1": ExampleName.STEINER_QUASIGROUP,
    "table2": ExampleName.UNSOLVABLE_V1,
    "table3": ExampleName.UNSOLVABLE_V2,
    "c5": ExampleName.C5,
    "nand": ExampleName.NAND_DISPERSION,
}

# (first n, default largest n)
SIZE_RANGES = {
    "table1": (1, 3),
    "table2": (2, 3),
    "table3": (2, 2),
    "c5": (4, 4),
    "nand": (2, 2),
}

MAXIMA_HEADER = ["n", "maximum", "ideal", "ratio"]
C5_HEADER = ["n", "strategy_count", "ideal", "ratio", "entropy_bound"]
NAND_HEADER = ["n", "maximum", "ideal", "ratio", "maximisers", "nand_unique"]


def ratio(count: int, ideal: int) -> str:
    return f"{count / ideal:.3f}"


def maxima_rows(system: System, sizes: Sequence[int], params: SearchParams) -> List[list]:
    """
    Best solution count per uniform size, against the ideal n^k for k variables
    """
    rows = []
    for n in sizes:
        result = maximize(system, DomainSizes.for_system(system, uniform=n), params)
        ideal = n ** len(system.vars)
        rows.append([n, result.best_count, ideal, ratio(result.best_count, ideal)])
    return rows


def c5_rows(max_n: int) -> List[list]:
    """
    The bidirected cycle strategy on the C5 core at every square n = m^2 <= max_n, against
    n raised to the entropy bound
    """
    bound = system_bound(gen(ExampleName.C5), uniform=2).normalised_bound
    rows = []
    for m in range(2, math.isqrt(max_n) + 1):
        core, interpretation = c5_witness(m)
        count = count_solutions(core, interpretation, sample_cap=0).count
        ideal = _power(m * m, bound)
        rows.append([m * m, count, ideal, ratio(count, ideal), str(bound)])
    return rows


def _power(n: int, exponent: Fraction) -> int:
    """n^exponent for exponents p/q where n is a perfect q-th power"""
    root = round(n ** (1 / exponent.denominator))
    if root**exponent.denominator != n:
        return round(n ** float(exponent))
    return root**exponent.numerator


def nand_rows() -> List[list]:
    """
    Exhaustive dispersion search with c pinned, listing how many S tables reach the maximum
    and whether the NAND table is the only one
    """
    system = gen(ExampleName.NAND_DISPERSION)
    sizes = DomainSizes.for_system(system, uniform=2)
    best, winners = all_maximisers(
        system, sizes, fixed_tables(ExampleName.NAND_DISPERSION), Objective.DISPERSION
    )
    ideal = 2 ** len(system.outputs)
    unique = len(winners) == 1 and np.array_equal(winners[0].tables["S"], NAND_TABLE)
    return [[2, best, ideal, ratio(best, ideal), len(winners), str(unique).lower()]]


def to_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def reproduce(args):
    first_n, default_max_n = SIZE_RANGES[args.table]
    max_n = args.max_n or default_max_n

    if args.table == "c5":
        header, rows = C5_HEADER, c5_rows(max_n)
    elif args.table == "nand":
        header, rows = NAND_HEADER, nand_rows()
    else:
        params = search_params(args)
        system = gen(TABLES[args.table])
        header, rows = MAXIMA_HEADER, maxima_rows(system, range(first_n, max_n + 1), params)

    report(
        args,
        to_csv(header, rows).rstrip("\n"),
        table=args.table,
        rows=[dict(zip(header, row)) for row in rows],
    )
