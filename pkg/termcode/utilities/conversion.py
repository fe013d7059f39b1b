import math
import re
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from termcode.exceptions import ParameterError


def fraction_to_text(value: Fraction) -> str:
    """Formats a rational as p/q, or p when the denominator is 1"""
    return str(Fraction(value))


def text_to_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParameterError(f"Improper rational '{text}'. Rationals must look like p/q")


def parse_sizes(text: str) -> Tuple[Optional[int], Dict[str, int]]:
    """
    Parses a domain size argument.

    Accepts either a bare integer, applied to every sort, or a comma separated list of SORT=n pairs.

    Returns
    -------
    (uniform size or None, mapping of sort name to size)
    """
    text = text.strip()
    if re.fullmatch(r"\d+", text):
        return int(text), {}

    sizes = {}
    for item in text.split(","):
        match = re.fullmatch(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(\d+)\s*", item)
        if match is None:
            raise ParameterError(
                f"Improper sizes '{text}'. Sizes must be n or of the form S=n[,S2=m]"
            )
        sizes[match.group(1)] = int(match.group(2))

    return None, sizes


def sizes_to_text(sizes: Dict[str, int]) -> str:
    return ",".join(f"{sort}={size}" for sort, size in sizes.items())


def integer_root(value: int, exponent: int) -> Optional[int]:
    """
    Returns
    -------
    The integer r with r ** exponent == value, or None
    """
    root = round(value ** (1 / exponent))
    for candidate in (root - 1, root, root + 1):
        if candidate >= 1 and candidate**exponent == value:
            return candidate

    return None


def primitive_power(value: int) -> Tuple[int, int]:
    """
    Decomposes value >= 2 as root ** exponent with the smallest possible root.
    """
    if value < 2:
        raise ParameterError(f"Cannot take the primitive power of {value}")

    for exponent in range(int(math.log2(value)), 0, -1):
        root = integer_root(value, exponent)
        if root is not None:
            return root, exponent

    return value, 1


def common_base(values: Iterable[int]) -> Tuple[int, Dict[int, int]]:
    """
    Finds the smallest base b such that every value is an integral power of b.

    Returns
    -------
    (base, mapping of value to its exponent)
    """
    values = sorted(set(values))
    decompositions = {value: primitive_power(value) for value in values}
    roots = {root for root, _ in decompositions.values()}
    if len(roots) != 1:
        raise ParameterError(
            f"Sizes {values} are not powers of a common integer; "
            f"choose commensurable sizes such as 4 and 16"
        )

    base = roots.pop()
    return base, {value: exponent for value, (_, exponent) in decompositions.items()}


def log_ratio(value: int, base: float) -> float:
    """log of value in the given base, -inf for zero"""
    if value <= 0:
        return float("-inf")

    return math.log(value) / math.log(base)
