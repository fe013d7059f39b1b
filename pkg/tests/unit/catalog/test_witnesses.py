import numpy as np
import pytest

from termcode.catalog import (
    nand_witness,
    network_coding_witness,
    sols_witness,
    steiner_witness,
    two_node_witness,
)
from termcode.catalog.generators import gen
from termcode.catalog.witnesses import (
    NAND_TABLE,
    SOLS_SQUARE,
    STEINER_TABLES,
    is_latin_square,
    is_self_orthogonal,
    sols_decoders,
)
from termcode.exceptions import ParameterError
from termcode.semantics import count_solutions, dispersion_image


def test_steiner_tables__order_three_is_minus_sum():
    table = np.array(STEINER_TABLES[3])
    x, y = np.indices((3, 3))
    assert np.array_equal(table, (-x - y) % 3)


@pytest.mark.parametrize("n, expected", [(3, 9), (4, 13)])
def test_steiner_witness__solution_count(n, expected):
    witness = steiner_witness(n)
    assert count_solutions(gen("steiner-quasigroup"), witness).count == expected


def test_steiner_witness__unknown_order():
    with pytest.raises(ParameterError):
        steiner_witness(5)


def test_sols_square__latin_and_self_orthogonal():
    assert is_latin_square(SOLS_SQUARE)
    assert is_self_orthogonal(SOLS_SQUARE)
    assert all(SOLS_SQUARE[i][i] == i for i in range(4))


def test_is_self_orthogonal__symmetric_square_fails():
    cyclic = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    assert is_latin_square(cyclic)
    assert not is_self_orthogonal(cyclic)
    with pytest.raises(ParameterError):
        sols_decoders(cyclic)


def test_is_latin_square__repeated_entries_fail():
    assert not is_latin_square(STEINER_TABLES[4])


def test_sols_witness__solves_every_pair():
    assert count_solutions(gen("sols"), sols_witness()).count == 16


def test_sols_decoders__invert_the_square():
    square = np.array(SOLS_SQUARE)
    decoders = sols_decoders(square)
    for x in range(4):
        for y in range(4):
            assert decoders["h1"][square[x, y], y] == x
            assert decoders["h3"][square[x, y], square[y, x]] == x
            assert decoders["h4"][square[x, y], square[y, x]] == y


@pytest.mark.parametrize("n", [2, 3, 4])
def test_network_coding_witness__solves_every_pair(n):
    assert count_solutions(gen("network-coding"), network_coding_witness(n)).count == n**2


def test_nand_witness__reaches_every_output_triple():
    witness = nand_witness()
    assert witness.tables["S"].tolist() == NAND_TABLE
    assert dispersion_image(gen("nand-dispersion"), witness) == 8


@pytest.mark.parametrize("n1, n2", [(2, 3), (3, 2), (4, 4)])
def test_two_node_witness__reaches_the_smaller_sort(n1, n2):
    assert count_solutions(gen("two-node-multisort"), two_node_witness(n1, n2)).count == min(n1, n2)
