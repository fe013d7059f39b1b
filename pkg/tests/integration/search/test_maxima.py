import math

import pytest

from termcode.catalog import example_names, gen, sols_witness
from termcode.constants import ExampleName, SearchMode
from termcode.dsl import parse
from termcode.entropy import system_bound
from termcode.exceptions import BudgetError
from termcode.ir import DomainSizes
from termcode.normalization import diversify, normalize, normalize_and_diversify
from termcode.search import (
    SearchParams,
    exhaustive_max,
    find_model,
    guess_at_n,
    guess_at_sizes,
    maximize,
)
from termcode.search.space import TableSpace
from termcode.semantics import count_solutions
from termcode.semantics.constructions import partition_lift


def get_maximum(name, n):
    system = gen(name)
    return maximize(system, DomainSizes.for_system(system, uniform=n)).best_count


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 9)])
def test_maximize__steiner_quasigroup(n, expected):
    assert get_maximum(ExampleName.STEINER_QUASIGROUP, n) == expected


def test_maximize__unsolvable_v1_at_two():
    assert get_maximum(ExampleName.UNSOLVABLE_V1, 2) == 2


def test_maximize__unsolvable_v2_at_two():
    assert get_maximum(ExampleName.UNSOLVABLE_V2, 2) == 128


@pytest.mark.parametrize("n1, n2", [(2, 3), (3, 2), (3, 4)])
def test_maximize__two_node_reaches_the_smaller_sort(n1, n2):
    system = gen(ExampleName.TWO_NODE_MULTISORT)
    result = maximize(system, {"S1": n1, "S2": n2})
    assert result.exhausted
    assert result.best_count == min(n1, n2)


@pytest.mark.parametrize("n1, n2", [(2, 3), (3, 4)])
def test_guess_at_sizes__two_node_uses_the_geometric_mean(n1, n2):
    result = guess_at_sizes(gen(ExampleName.TWO_NODE_MULTISORT), {"S1": n1, "S2": n2})
    assert result.base == pytest.approx(math.sqrt(n1 * n2))
    assert result.value == pytest.approx(math.log(min(n1, n2)) / math.log(math.sqrt(n1 * n2)))
    assert result.exact


def test_guess_at_n__network_coding_meets_its_entropy_bound():
    system = gen(ExampleName.NETWORK_CODING)
    result = guess_at_n(system, 2)
    bound = system_bound(system, uniform=2).normalised_bound
    assert result.value == pytest.approx(2.0)
    assert result.value <= float(bound) + 1e-9


# Interpretations of a diversified system the soundness check enumerates exhaustively
SOUNDNESS_CAP = 2**20


@pytest.mark.parametrize("name", example_names())
@pytest.mark.parametrize("n", [2, 3])
def test_guess_at_n__exhaustive_value_never_exceeds_the_entropy_bound(name, n):
    system = gen(name)
    if system.outputs:
        pytest.skip("dispersion problems have no guessing value")
    diversified, _, _ = normalize_and_diversify(system)
    if TableSpace(diversified, DomainSizes.for_system(diversified, uniform=n)).size > SOUNDNESS_CAP:
        pytest.skip("too many interpretations to enumerate")
    try:
        bound = system_bound(system, uniform=n).normalised_bound
    except BudgetError:
        pytest.skip("dependency graph above the vertex cap")

    result = guess_at_n(system, n, SearchParams(mode=SearchMode.EXHAUSTIVE))
    assert result.exact
    assert result.value <= float(bound) + 1e-9
    assert count_solutions(result.diversified, result.witness).count == result.count


def test_maximize__annealing_finds_thirteen_steiner_solutions_at_four():
    system = gen(ExampleName.STEINER_QUASIGROUP)
    params = SearchParams(mode=SearchMode.ANNEAL, seed=0)
    result = maximize(system, DomainSizes.for_system(system, uniform=4), params)
    assert result.best_count >= 13
    assert count_solutions(system, result.witness).count == result.best_count


def test_maximize__unsolvable_v1_at_three():
    system = gen(ExampleName.UNSOLVABLE_V1)
    result = maximize(system, DomainSizes.for_system(system, uniform=3))
    assert result.exhausted
    assert result.best_count >= 4


INVOLUTION = "sort A\nfun g : A -> A\nvar x : A\neq g(g(x)) = x\n"
PROJECTION = "sort A\nfun f : A A -> A\nvar x y : A\neq f(x,y) = x\n"
CHAIN = "sort A\nfun g : A -> A\nvar x y z : A\neq g(x) = y\neq g(y) = z\n"


@pytest.mark.parametrize("source, m", [(INVOLUTION, 2), (PROJECTION, 1), (CHAIN, 1)])
def test_partition_lift__count_lies_between_the_diversified_maxima(source, m):
    system = parse(source)
    base, var_map = normalize(system)
    diversified, symbol_map = diversify(base)

    small = exhaustive_max(diversified, {"A": m})
    lifted = partition_lift(diversified, small.witness, base, symbol_map, var_map)
    n = lifted.sizes["A"]
    assert n == m * len(diversified.var_names)
    lifted_count = count_solutions(system, lifted).count
    original_max = exhaustive_max(system, {"A": n}).best_count
    diversified_max = exhaustive_max(diversified, {"A": n}).best_count

    assert small.best_count <= lifted_count <= original_max <= diversified_max


def test_sols__witness_solves_every_pair_at_four():
    assert count_solutions(gen(ExampleName.SOLS), sols_witness()).count == 16


@pytest.mark.parametrize("n", [2, 3])
def test_sols__no_model_at_small_orders(n):
    assert find_model(gen(ExampleName.SOLS), {"A": n}) is None
