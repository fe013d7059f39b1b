from fractions import Fraction

import pytest

from termcode.dsl import parse_file
from termcode.entropy import shannon_bound, system_bound
from termcode.exceptions import ParameterError
from termcode.graph import DepGraph
from termcode.normalization import normalize_and_diversify
from tests import NETWORK_CODING_PATH, TWO_NODE_PATH


def get_two_node_graph():
    diversified, _, _ = normalize_and_diversify(parse_file(TWO_NODE_PATH))
    return DepGraph.build(diversified)


@pytest.mark.parametrize("n", [2, 3, 7])
def test_shannon_bound__uniform_sizes_do_not_matter(n):
    result = shannon_bound(get_two_node_graph(), {"S1": n, "S2": n})
    assert result.normalised_bound == 1
    assert result.base == n


def test_shannon_bound__mixed_sizes_use_a_common_base():
    result = shannon_bound(get_two_node_graph(), {"S1": 2, "S2": 4})
    assert result.base == 2
    assert result.max_joint == 1
    assert result.normalised_bound == Fraction(2, 3)
    assert result.max_joint_entropy_bits == pytest.approx(1.0)


@pytest.mark.parametrize("sizes", [{"S1": 1, "S2": 2}, {"S1": 2, "S2": 3}])
def test_shannon_bound__rejects_incommensurable_or_trivial_sizes(sizes):
    with pytest.raises(ParameterError):
        shannon_bound(get_two_node_graph(), sizes)


def test_system_bound__network_coding():
    result = system_bound(parse_file(NETWORK_CODING_PATH), uniform=2)
    assert result.normalised_bound == 2


def test_certificate_json__uses_rational_text():
    certificate = system_bound(parse_file(TWO_NODE_PATH), uniform=2).certificate_json()
    assert certificate["X,Y"] == "1"
    assert all("/" in value or value.isdigit() for value in certificate.values())
