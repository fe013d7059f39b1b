import pytest

from termcode.catalog import c5_witness
from termcode.dsl import parse, parse_file
from termcode.exceptions import ParameterError
from termcode.normalization import VarMap, normalize, normalize_and_diversify
from termcode.semantics import Interpretation, count_solutions
from termcode.semantics.constructions import (
    block_offsets,
    bidirected_cycle_strategy,
    cycle_core,
    lift_assignment,
    modular_interpretation,
    partition_lift,
    product,
    projection_strategy,
)
from tests import NETWORK_CODING_PATH, STEINER_PATH
from tests.unit.semantics.test_Interpretation import get_steiner_interpretation


def get_projection_system():
    return parse("sort A\nfun f : A A -> A\nvar x y : A\neq f(x,y) = x\n")


def get_diversified_steiner_witness(diversified):
    # f2(x,y) = y, f3(y,x) = y and f4(x,_a1) = _a1 put _a1 = y on every assignment
    return Interpretation.from_functions(
        diversified,
        {"A": 2},
        {
            "f1": lambda a, b: a,
            "f2": lambda a, b: b,
            "f3": lambda a, b: a,
            "f4": lambda a, b: b,
        },
    )


def test_product__multiplies_solution_counts():
    system = parse_file(STEINER_PATH)
    squared = product(system, get_steiner_interpretation(), get_steiner_interpretation())
    assert dict(squared.sizes) == {"A": 9}
    assert count_solutions(system, squared).count == 81


def test_block_offsets():
    diversified, _, _ = normalize_and_diversify(parse_file(STEINER_PATH))
    offsets, sizes = block_offsets(diversified, {"A": 2})
    assert offsets == {"x": 0, "y": 2, "_a1": 4}
    assert dict(sizes) == {"A": 6}


def test_partition_lift__keeps_every_diversified_solution():
    base, _ = normalize(parse_file(STEINER_PATH))
    diversified, symbol_map = normalize_and_diversify(parse_file(STEINER_PATH))[0::2]
    witness = get_diversified_steiner_witness(diversified)
    witness_report = count_solutions(diversified, witness, sample_cap=100)
    assert witness_report.count == 4

    lifted = partition_lift(diversified, witness, base, symbol_map)
    lifted_report = count_solutions(base, lifted, sample_cap=1000)
    assert dict(lifted.sizes) == {"A": 6}
    assert lifted_report.count >= witness_report.count
    for values in witness_report.sample:
        assert (
            lift_assignment(diversified, base, symbol_map, witness.sizes, values)
            in lifted_report.sample
        )


def get_merged_projection_system():
    return parse("sort A\nfun f : A A -> A\nvar x y z : A\neq f(x,y) = x\neq z = y\n")


def test_partition_lift__lifts_solutions_back_through_merged_variables():
    original = get_merged_projection_system()
    base, var_map = normalize(original)
    diversified, symbol_map = normalize_and_diversify(original)[0::2]
    assert var_map.merged == {"z": "y"}
    witness = Interpretation.from_functions(
        diversified, {"A": 2}, {name: lambda a, b: a for name in diversified.func_names}
    )
    witness_report = count_solutions(diversified, witness, sample_cap=100)

    lifted = partition_lift(diversified, witness, base, symbol_map, var_map)
    original_report = count_solutions(original, lifted, sample_cap=100)
    assert original_report.count == count_solutions(base, lifted).count
    assert original_report.count >= witness_report.count
    for values in witness_report.sample:
        x, y, z = lift_assignment(
            diversified, base, symbol_map, witness.sizes, values, var_map, original
        )
        assert z == y
        assert (x, y, z) in original_report.sample


def test_partition_lift__rejects_inconsistent_var_map():
    original = get_merged_projection_system()
    base, _ = normalize(original)
    diversified, symbol_map = normalize_and_diversify(original)[0::2]
    witness = Interpretation.from_functions(
        diversified, {"A": 2}, {name: lambda a, b: a for name in diversified.func_names}
    )
    with pytest.raises(ParameterError):
        partition_lift(diversified, witness, base, symbol_map, VarMap(merged={"x": "y"}))


def test_lift_assignment__original_order_needs_var_map():
    original = get_merged_projection_system()
    base, _ = normalize(original)
    diversified, symbol_map = normalize_and_diversify(original)[0::2]
    with pytest.raises(ParameterError):
        lift_assignment(diversified, base, symbol_map, {"A": 2}, (0, 0), original=original)


def test_partition_lift__rejects_unflattened_base():
    diversified, _, symbol_map = normalize_and_diversify(parse_file(STEINER_PATH))
    with pytest.raises(ParameterError):
        partition_lift(
            diversified,
            get_diversified_steiner_witness(diversified),
            parse_file(STEINER_PATH),
            symbol_map,
        )


def test_cycle_core__keeps_only_cycle_equations():
    core, _ = c5_witness(2)
    assert core.var_names == ["x", "y", "z", "_a1", "_a2"]
    assert len(core.equations) == 5
    assert core.disequalities == ()
    for equation in core.equations:
        assert len(equation.lhs.args) == 2


def test_cycle_core__unknown_vertex_raises():
    diversified, _, _ = normalize_and_diversify(parse_file(STEINER_PATH))
    with pytest.raises(ParameterError):
        cycle_core(diversified, ["x", "w"])


@pytest.mark.parametrize("m, expected_count", [(1, 1), (2, 32)])
def test_bidirected_cycle_strategy__c5_reaches_m_to_the_fifth(m, expected_count):
    core, interpretation = c5_witness(m)
    assert dict(interpretation.sizes) == {"A": m * m}
    assert count_solutions(core, interpretation).count == expected_count


def test_bidirected_cycle_strategy__rejects_empty_alphabet():
    core, _ = c5_witness(2)
    with pytest.raises(ParameterError):
        bidirected_cycle_strategy(core, ["x"], 0)


@pytest.mark.parametrize("n", [2, 4])
def test_projection_strategy(n):
    system = get_projection_system()
    interpretation = projection_strategy(system, {"A": n}, {"f": 0})
    assert count_solutions(system, interpretation).count == n**2


@pytest.mark.parametrize("choices", [{"f": 2}, {"f": -1}])
def test_projection_strategy__rejects_missing_positions(choices):
    with pytest.raises(ParameterError):
        projection_strategy(get_projection_system(), {"A": 2}, choices)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_modular_interpretation__network_coding(n):
    system = parse_file(NETWORK_CODING_PATH)
    interpretation = modular_interpretation(
        system, n, {"f": [1, 1], "h1": [-1, 1], "h2": [-1, 1]}
    )
    assert count_solutions(system, interpretation).count == n**2


def test_modular_interpretation__checks_coefficient_count():
    with pytest.raises(ParameterError):
        modular_interpretation(parse_file(NETWORK_CODING_PATH), 2, {"f": [1]})
