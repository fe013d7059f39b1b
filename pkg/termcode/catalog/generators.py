"""
Named example systems, emitted as .tc source text and parsed.
"""
import itertools
import logging
from typing import Callable, Dict, List

import numpy as np

from termcode.constants import ExampleName
from termcode.dsl.parser import parse
from termcode.exceptions import ParameterError
from termcode.ir.System import System

logger = logging.getLogger(__name__)


def _steiner_quasigroup(symmetric: bool = False) -> str:
    lines = [
        "sort A",
        "fun f : A A -> A",
        "var x y : A",
        "eq f(x,x) = x",
    ]
    if symmetric:
        lines.append("eq f(y,y) = y")
    lines += [
        "eq f(x,y) = f(y,x)",
        "eq f(x,f(x,y)) = y",
    ]
    return "\n".join(lines)


def _steiner_t(t: int = 2) -> str:
    """
    Steiner S(t, t+1, n) axioms over x1..xt, guarded by pairwise distinctness: symmetry under
    every non-identity permutation, inversion at every position and the block non-equalities
    """
    if t < 2:
        raise ParameterError("steiner-t needs t >= 2")
    names = [f"x{i}" for i in range(1, t + 1)]
    block = f"f({','.join(names)})"
    lines = [
        "sort A",
        f"fun f : {' '.join(['A'] * t)} -> A",
        f"var {' '.join(names)} : A",
    ]

    if t == 2:
        lines += ["eq f(x1,x1) = x1", "eq f(x1,x2) = f(x2,x1)", "eq f(x1,f(x1,x2)) = x2"]
    else:
        for permutation in itertools.permutations(names):
            if list(permutation) != names:
                lines.append(f"eq {block} = f({','.join(permutation)})")
        for position in range(t):
            args = list(names)
            args[position] = block
            lines.append(f"eq f({','.join(args)}) = {names[position]}")

    for first, second in itertools.combinations(names, 2):
        lines.append(f"neq {first} != {second}")
    for name in names:
        lines.append(f"neq {block} != {name}")
    return "\n".join(lines)


def _sols() -> str:
    return "\n".join(
        [
            "sort A",
            "fun f : A A -> A",
            "fun h1 : A A -> A",
            "fun h2 : A A -> A",
            "fun h3 : A A -> A",
            "fun h4 : A A -> A",
            "var x y : A",
            "eq h1(f(x,y),y) = x",
            "eq h2(x,f(x,y)) = y",
            "eq h3(f(x,y),f(y,x)) = x",
            "eq h4(f(x,y),f(y,x)) = y",
        ]
    )


def _network_coding() -> str:
    return "\n".join(
        [
            "sort A",
            "fun f : A A -> A",
            "fun h1 : A A -> A",
            "fun h2 : A A -> A",
            "var x y z : A",
            "eq z = f(x,y)",
            "eq h1(x,z) = y",
            "eq h2(y,z) = x",
        ]
    )


def _unsolvable_v1() -> str:
    return "\n".join(
        [
            "sort A",
            "fun f : A A -> A",
            "var x y : A",
            "eq f(f(x,y),y) = x",
            "eq f(x,f(y,x)) = y",
            "eq f(f(x,y),f(y,x)) = x",
            "eq f(f(y,x),f(x,y)) = y",
        ]
    )


def _unsolvable_v2() -> str:
    return "\n".join(
        [
            "sort A",
            "fun f : A A -> A",
            "var x1 y1 x2 y2 x3 y3 x4 y4 : A",
            "eq f(f(x1,y1),y1) = x1",
            "eq f(x2,f(y2,x2)) = y2",
            "eq f(f(x3,y3),f(y3,x3)) = x3",
            "eq f(f(y4,x4),f(x4,y4)) = y4",
        ]
    )


def _c5() -> str:
    return "\n".join(
        [
            "sort A",
            "fun f : A A -> A",
            "var x y z : A",
            "eq f(f(z,x),y) = x",
            "eq f(x,f(y,z)) = y",
            "eq f(f(y,z),f(z,x)) = z",
            "neq x != z",
            "neq f(x,y) != f(y,x)",
            "neq x != y",
        ]
    )


def _two_node_multisort() -> str:
    return "\n".join(
        [
            "sort S1",
            "sort S2",
            "fun f1 : S2 -> S1",
            "fun f2 : S1 -> S2",
            "var X : S1",
            "var Y : S2",
            "eq f1(Y) = X",
            "eq f2(X) = Y",
        ]
    )


def _single_relay() -> str:
    return "\n".join(
        [
            "sort Sort1",
            "sort Sort2",
            "sort Sort3",
            "fun f : Sort1 Sort2 -> Sort3",
            "var x w : Sort1",
            "var y z : Sort2",
            "out f(x,y), f(x,z), f(w,y), f(w,z)",
        ]
    )


def _nand_dispersion() -> str:
    return "\n".join(
        [
            "sort Bool",
            "fun c : -> Bool",
            "fun S : Bool Bool -> Bool",
            "var x y z : Bool",
            "neq S(c,c) != c",
            "out S(x,x), S(c,y), S(z,c)",
        ]
    )


_GENERATORS: Dict[ExampleName, Callable[..., str]] = {
    ExampleName.STEINER_QUASIGROUP: _steiner_quasigroup,
    ExampleName.STEINER_QUASIGROUP_SYM: lambda: _steiner_quasigroup(symmetric=True),
    ExampleName.STEINER_T: _steiner_t,
    ExampleName.SOLS: _sols,
    ExampleName.NETWORK_CODING: _network_coding,
    ExampleName.UNSOLVABLE_V1: _unsolvable_v1,
    ExampleName.UNSOLVABLE_V2: _unsolvable_v2,
    ExampleName.C5: _c5,
    ExampleName.TWO_NODE_MULTISORT: _two_node_multisort,
    ExampleName.SINGLE_RELAY: _single_relay,
    ExampleName.NAND_DISPERSION: _nand_dispersion,
}


def example_names() -> List[str]:
    return [name.value for name in ExampleName]


def _example(name) -> ExampleName:
    try:
        return ExampleName(name)
    except ValueError:
        raise ParameterError(
            f"Unknown example '{name}', expected one of {', '.join(example_names())}"
        )


def source(name, **params) -> str:
    """
    .tc text of a named example

    Parameters
    ----------
    name
        An ExampleName or its string value

    params
        Only steiner-t takes a parameter, t >= 2

    Raises
    ------
    ParameterError
        For unknown names and invalid or unexpected parameters
    """
    example = _example(name)
    params = {key: value for key, value in params.items() if value is not None}
    try:
        text = _GENERATORS[example](**params)
    except TypeError:
        raise ParameterError(f"Example '{example.value}' does not take parameters {sorted(params)}")
    return f"# {example.value}\n{text}\n"


def gen(name, **params) -> System:
    """A named example as a validated system"""
    system = parse(source(name, **params))
    logger.debug("generated %s with %d equations", name, len(system.equations))
    return system


def fixed_tables(name) -> Dict[str, np.ndarray]:
    """Tables an example pins before searching; the NAND gate example fixes c = 1"""
    if _example(name) == ExampleName.NAND_DISPERSION:
        return {"c": np.array(1)}
    return {}


def steiner_triple_system_exists(n: int) -> bool:
    """Steiner quasigroups of order n exist exactly for n = 1, 3 mod 6"""
    return n % 6 in (1, 3)
