import math
from fractions import Fraction

import pytest

from termcode.exceptions import ParameterError
from termcode.utilities import conversion


@pytest.mark.parametrize(
    "text, expected_sizes",
    [
        ("3", (3, {})),
        ("A=2", (None, {"A": 2})),
        ("S1=2,S2=3", (None, {"S1": 2, "S2": 3})),
        (" S1 = 4 , S2=16 ", (None, {"S1": 4, "S2": 16})),
    ],
)
def test_parse_sizes(text, expected_sizes):
    assert conversion.parse_sizes(text) == expected_sizes


@pytest.mark.parametrize("text", ["", "A", "A=", "=2", "A=2;B=3", "2,3"])
def test_parse_sizes__rejects_malformed_sizes(text):
    with pytest.raises(ParameterError):
        conversion.parse_sizes(text)


def test_sizes_to_text__inverts_parse_sizes():
    sizes = {"S1": 2, "S2": 3}
    assert conversion.parse_sizes(conversion.sizes_to_text(sizes)) == (None, sizes)


@pytest.mark.parametrize(
    "value, expected_text",
    [(Fraction(5, 2), "5/2"), (Fraction(4, 2), "2"), (Fraction(0), "0")],
)
def test_fraction_to_text(value, expected_text):
    assert conversion.fraction_to_text(value) == expected_text
    assert conversion.text_to_fraction(expected_text) == value


def test_text_to_fraction__rejects_malformed_rationals():
    with pytest.raises(ParameterError):
        conversion.text_to_fraction("five halves")


@pytest.mark.parametrize(
    "value, exponent, expected_root",
    [(32, 5, 2), (81, 4, 3), (1000000, 2, 1000), (10, 2, None), (1, 3, 1)],
)
def test_integer_root(value, exponent, expected_root):
    assert conversion.integer_root(value, exponent) == expected_root


@pytest.mark.parametrize(
    "value, expected_power",
    [(2, (2, 1)), (8, (2, 3)), (16, (2, 4)), (36, (6, 2)), (12, (12, 1))],
)
def test_primitive_power(value, expected_power):
    assert conversion.primitive_power(value) == expected_power


@pytest.mark.parametrize(
    "values, expected_base",
    [
        ([4, 16], (2, {4: 2, 16: 4})),
        ([3, 9, 27], (3, {3: 1, 9: 2, 27: 3})),
        ([5], (5, {5: 1})),
    ],
)
def test_common_base(values, expected_base):
    assert conversion.common_base(values) == expected_base


def test_common_base__rejects_incommensurable_sizes():
    with pytest.raises(ParameterError):
        conversion.common_base([2, 3])


def test_log_ratio():
    assert conversion.log_ratio(8, 2) == pytest.approx(3)
    assert conversion.log_ratio(0, 2) == -math.inf
