import pytest

from termcode.dispersion import (
    decide_threshold,
    fitted_exponents,
    growth_oracle,
    integer_exponent,
    single_relay_bounds,
)
from termcode.dsl import parse, parse_file
from termcode.exceptions import ParameterError
from tests import NAND_PATH, RELAY_PATH
from tests.unit.dispersion.test_TermDag import get_dispersion_system


@pytest.mark.parametrize(
    "outputs, expected_exponent",
    [
        ("x, y", 2),
        ("f(x,y)", 1),
        ("g(x), g(y)", 2),
        ("g(f(x,y))", 1),
    ],
)
def test_integer_exponent(outputs, expected_exponent):
    result = integer_exponent(get_dispersion_system(outputs))
    assert result.D == expected_exponent
    assert not result.oracle_checked


def test_integer_exponent__single_relay():
    assert integer_exponent(parse_file(RELAY_PATH)).D == 4


def test_integer_exponent__unary_outputs_of_one_input():
    system = parse("sort A\nfun f : A -> A\nfun g : A -> A\nvar x : A\nout f(x), g(x)\n")
    assert integer_exponent(system).D == 1


def test_integer_exponent__oracle_stays_within_n_to_the_d():
    system = get_dispersion_system("f(x,y)")
    result = integer_exponent(system, oracle_sizes=[2])
    assert result.oracle_checked
    assert result.growth == [(2, 2, True)]


def test_integer_exponent__rejects_inconsistent_disequalities():
    system = parse("sort A\nvar x : A\nneq x != x\nout x\n", validate=False)
    with pytest.raises(ParameterError):
        integer_exponent(system)


@pytest.mark.parametrize("d, expected_decision", [(0, True), (3, True), (4, False)])
def test_decide_threshold__single_relay(d, expected_decision):
    assert decide_threshold(parse_file(RELAY_PATH), d) == expected_decision


def test_decide_threshold__rejects_negative_thresholds():
    with pytest.raises(ParameterError):
        decide_threshold(parse_file(RELAY_PATH), -1)


def test_growth_oracle__nand_with_pinned_constant():
    assert growth_oracle(parse_file(NAND_PATH), [2], fixed={"c": 1}) == [(2, 8, True)]


def test_fitted_exponents():
    rows = [(2, 4, True), (4, 16, True), (8, 0, False)]
    assert fitted_exponents(rows) == [pytest.approx(2.0)]


@pytest.mark.parametrize(
    "sizes, expected_bounds",
    [
        ((2, 2, 4), (4, 16)),
        ((2, 2, 2), (0, 16)),
        ((3, 3, 10), (36, 81)),
    ],
)
def test_single_relay_bounds(sizes, expected_bounds):
    assert single_relay_bounds(*sizes) == expected_bounds
