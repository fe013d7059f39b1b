import numpy as np
import pytest

from termcode.catalog import gen, sols_witness
from termcode.catalog.witnesses import SOLS_SQUARE
from termcode.constants import ExampleName
from termcode.dsl import parse, parse_file
from termcode.exceptions import BudgetError
from termcode.search import find_model
from termcode.search.models import decoder_symbols
from termcode.semantics import count_solutions
from tests import NETWORK_CODING_PATH, STEINER_PATH


def get_inverse_system():
    return parse(
        "sort A\n"
        "fun g : A -> A\n"
        "fun h : A -> A\n"
        "var x : A\n"
        "eq h(g(x)) = x\n"
        "neq g(x) != x\n"
    )


def test_decoder_symbols():
    assert decoder_symbols(gen(ExampleName.SOLS)) == ["h1", "h2", "h3", "h4"]
    assert decoder_symbols(get_inverse_system()) == ["h"]
    assert decoder_symbols(parse_file(STEINER_PATH)) == []


def test_decoder_symbols__pinned_symbols_are_not_decoders():
    assert decoder_symbols(get_inverse_system(), fixed={"h": np.arange(2)}) == []


@pytest.mark.parametrize("n, has_model", [(1, False), (2, True), (3, True)])
def test_find_model__derived_decoders(n, has_model):
    system = get_inverse_system()
    model = find_model(system, {"A": n})
    assert (model is not None) == has_model
    if model is not None:
        assert count_solutions(system, model).count == n


def test_find_model__steiner_quasigroup_of_order_three():
    system = parse_file(STEINER_PATH)
    model = find_model(system, {"A": 3})
    assert model is not None
    assert count_solutions(system, model).count == 9
    assert find_model(system, {"A": 2}) is None


def test_find_model__sols_of_order_four():
    system = gen(ExampleName.SOLS)
    model = find_model(system, {"A": 4}, fixed={"f": SOLS_SQUARE})
    assert model is not None
    assert model == sols_witness()


def test_find_model__no_model_when_a_variable_is_determined():
    assert find_model(parse_file(NETWORK_CODING_PATH), {"A": 2}) is None


def test_find_model__respects_the_budget(monkeypatch):
    monkeypatch.setenv("TC_BUDGET", "10")
    with pytest.raises(BudgetError):
        find_model(parse_file(STEINER_PATH), {"A": 3})
