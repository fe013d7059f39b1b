import pytest

from termcode.constants import Objective, SearchMode
from termcode.dsl import parse_file
from termcode.exceptions import ParameterError
from termcode.search import SearchParams, anneal_max, maximize
from termcode.semantics import count_solutions
from tests import NAND_PATH, STEINER_PATH
from tests.unit.semantics.test_Interpretation import get_steiner_interpretation


def get_anneal_params(**settings):
    return SearchParams(mode=SearchMode.ANNEAL, steps=300, restarts=2, **settings)


def test_anneal_max__same_seed_same_result():
    system = parse_file(STEINER_PATH)
    first = anneal_max(system, {"A": 3}, get_anneal_params(seed=11))
    second = anneal_max(system, {"A": 3}, get_anneal_params(seed=11))
    assert first.best_count == second.best_count
    assert first.witness == second.witness


def test_anneal_max__reports_the_witness_count():
    system = parse_file(STEINER_PATH)
    result = anneal_max(system, {"A": 3}, get_anneal_params(seed=3))
    assert not result.exhausted
    assert 0 <= result.best_count <= 9
    assert count_solutions(system, result.witness).count == result.best_count


def test_anneal_max__warm_start_keeps_an_optimal_interpretation():
    system = parse_file(STEINER_PATH)
    result = maximize(
        system, {"A": 3}, get_anneal_params(), initial=get_steiner_interpretation()
    )
    assert result.best_count == 9
    assert result.witness == get_steiner_interpretation()


def test_anneal_max__stops_at_the_trivial_maximum():
    result = anneal_max(
        parse_file(STEINER_PATH), {"A": 3}, get_anneal_params(), initial=get_steiner_interpretation()
    )
    # restart 0 starts at the maximum and takes no step
    assert result.explored < 2 * 300


def test_anneal_max__dispersion_needs_outputs():
    with pytest.raises(ParameterError):
        anneal_max(parse_file(STEINER_PATH), {"A": 2}, get_anneal_params(), objective=Objective.DISPERSION)


def test_anneal_max__pinned_tables_stay_pinned():
    result = anneal_max(
        parse_file(NAND_PATH),
        {"Bool": 2},
        get_anneal_params(),
        fixed={"c": 1},
        objective=Objective.DISPERSION,
    )
    assert result.witness.tables["c"] == 1
