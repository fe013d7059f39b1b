from fractions import Fraction

import pytest

from termcode.catalog import c5_witness, gen, unsolvable_projection_witness
from termcode.constants import ExampleName
from termcode.entropy import system_bound
from termcode.normalization import normalize_and_diversify
from termcode.semantics import count_solutions


@pytest.mark.parametrize(
    "name, n",
    [
        (ExampleName.UNSOLVABLE_V1, 2),
        (ExampleName.UNSOLVABLE_V1, 3),
        (ExampleName.UNSOLVABLE_V2, 2),
    ],
)
def test_unsolvable_projection_witness__solves_every_original_assignment(name, n):
    system = gen(name)
    diversified, _, _ = normalize_and_diversify(system)
    witness = unsolvable_projection_witness(n, diversified, system.var_names)
    assert count_solutions(diversified, witness).count == n ** len(system.vars)


@pytest.mark.parametrize("m, expected", [(1, 1), (2, 32), (3, 243)])
def test_c5_witness__reaches_n_to_five_halves(m, expected):
    core, interpretation = c5_witness(m)
    count = count_solutions(core, interpretation, sample_cap=0).count
    assert count == expected
    assert count == (m * m) ** Fraction(5, 2)


def test_c5_witness__meets_the_entropy_bound():
    bound = system_bound(gen(ExampleName.C5), uniform=2).normalised_bound
    core, interpretation = c5_witness(2)
    assert count_solutions(core, interpretation, sample_cap=0).count == 4 ** bound
