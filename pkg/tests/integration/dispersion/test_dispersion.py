import itertools

import numpy as np
import pytest

from termcode.catalog import fixed_tables, gen
from termcode.constants import ExampleName
from termcode.dispersion import (
    fitted_exponents,
    growth_oracle,
    integer_exponent,
    lift_decoders,
    reduce_to_termcoding,
    single_relay_bounds,
)
from termcode.dsl import parse
from termcode.search import dispersion_max
from termcode.semantics import Interpretation, dispersion_image, projection_count


def get_nand_candidates(system):
    for values in itertools.product(range(2), repeat=4):
        table = np.array(values).reshape(2, 2)
        yield Interpretation.for_system(system, {"Bool": 2}, {"c": 1, "S": table})


def test_lift_decoders__projection_count_equals_the_image_for_every_table():
    system = gen(ExampleName.NAND_DISPERSION)
    reduction = reduce_to_termcoding(system)
    for interpretation in get_nand_candidates(system):
        lifted = lift_decoders(reduction, system, interpretation)
        assert projection_count(reduction.system, lifted, reduction.projection) == (
            dispersion_image(system, interpretation)
        )


def test_integer_exponent__nand_oracle():
    system = gen(ExampleName.NAND_DISPERSION)
    result = integer_exponent(
        system, oracle_sizes=[2], fixed=fixed_tables(ExampleName.NAND_DISPERSION)
    )
    assert result.D == 3
    assert result.oracle_checked
    assert result.growth == [(2, 8, True)]


@pytest.mark.parametrize("n", [2, 3])
def test_dispersion_max__single_relay_within_counting_bounds(n):
    system = gen(ExampleName.SINGLE_RELAY)
    result = dispersion_max(system, {"Sort1": n, "Sort2": n, "Sort3": n})
    lower, upper = single_relay_bounds(n, n, n)
    assert result.exhausted
    assert lower <= result.best_count <= upper


def test_integer_exponent__single_relay_oracle_and_fit():
    system = gen(ExampleName.SINGLE_RELAY)
    result = integer_exponent(system, oracle_sizes=[2, 3])
    assert result.D == 4
    assert result.oracle_checked
    assert all(exponent <= 4 + 1e-9 for exponent in fitted_exponents(result.growth))


def test_dispersion_max__reduced_projection_objective():
    system = gen(ExampleName.NAND_DISPERSION)
    reduction = reduce_to_termcoding(system)
    best = dispersion_max(
        system, {"Bool": 2}, fixed=fixed_tables(ExampleName.NAND_DISPERSION)
    ).best_count
    lifted = lift_decoders(
        reduction,
        system,
        Interpretation.for_system(system, {"Bool": 2}, {"c": 1, "S": [[1, 1], [1, 0]]}),
    )
    assert best == 8
    assert projection_count(reduction.system, lifted, reduction.projection) == best


def test_growth_oracle__free_outputs_grow_quadratically():
    system = parse("sort A\nfun f : A -> A\nvar x y : A\nout x, y\n")
    rows = growth_oracle(system, [2, 3, 4])
    assert rows == [(2, 4, True), (3, 9, True), (4, 16, True)]
    assert fitted_exponents(rows) == pytest.approx([2.0, 2.0])
