import numpy as np
import pytest

from termcode.dsl import parse_file
from termcode.exceptions import ParameterError
from termcode.search.space import TableSpace
from tests import NAND_PATH, STEINER_PATH, TWO_NODE_PATH


def get_steiner_space(n=2):
    return TableSpace(parse_file(STEINER_PATH), {"A": n})


def test_table_space__size_and_radices():
    space = get_steiner_space()
    assert space.free == ["f"]
    assert space.radices == [2, 2, 2, 2]
    assert space.size == 16
    assert space.cells == 4
    assert space.work() == 64


def test_table_space__mixed_radices_follow_result_sorts():
    space = TableSpace(parse_file(TWO_NODE_PATH), {"S1": 2, "S2": 3})
    assert space.radices == [2, 2, 2, 3, 3]
    assert space.size == 72


def test_decode__first_entry_is_most_significant():
    space = get_steiner_space()
    assert space.interpretation_at(1).tables["f"].tolist() == [[0, 0], [0, 1]]
    assert space.interpretation_at(8).tables["f"].tolist() == [[1, 0], [0, 0]]


def test_decode__batches():
    tables = get_steiner_space().decode(np.arange(16))
    assert tables["f"].shape == (16, 2, 2)
    assert len({table.tobytes() for table in tables["f"]}) == 16


@pytest.mark.parametrize("index", [0, 5, 15])
def test_encode__inverts_interpretation_at(index):
    space = get_steiner_space()
    assert space.encode(space.interpretation_at(index)) == index


def test_table_space__pinned_tables_are_not_enumerated():
    space = TableSpace(parse_file(NAND_PATH), {"Bool": 2}, fixed={"c": np.array(1)})
    assert space.free == ["S"]
    assert space.size == 16
    tables = space.decode(np.array([0, 1]))
    assert tables["c"].tolist() == [1, 1]


@pytest.mark.parametrize("fixed", [{"d": 1}, {"c": 2}, {"c": -1}])
def test_table_space__rejects_bad_pinned_tables(fixed):
    with pytest.raises(ParameterError):
        TableSpace(parse_file(NAND_PATH), {"Bool": 2}, fixed=fixed)


def test_table_space__accepts_flat_pinned_tables():
    space = TableSpace(parse_file(NAND_PATH), {"Bool": 2}, fixed={"S": [1, 1, 1, 0]})
    assert space.fixed["S"].tolist() == [[1, 1], [1, 0]]
    assert space.free == ["c"]


def test_table_space__excluded_symbols():
    space = TableSpace(parse_file(NAND_PATH), {"Bool": 2}, exclude=["S"])
    assert space.free == ["c"]
    assert space.size == 2


def test_mutable_cells__skips_single_valued_entries():
    assert get_steiner_space(1).mutable_cells() == []
    assert get_steiner_space(2).mutable_cells() == [("f", 0, 2), ("f", 1, 2), ("f", 2, 2), ("f", 3, 2)]


def test_random_tables__are_seeded():
    space = get_steiner_space(3)
    first = space.random_tables(np.random.default_rng(7))["f"]
    second = space.random_tables(np.random.default_rng(7))["f"]
    assert first.shape == (1, 3, 3)
    assert np.array_equal(first, second)
