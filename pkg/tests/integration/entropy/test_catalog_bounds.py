import math
import random
from fractions import Fraction

import pytest

from termcode.catalog import gen, source
from termcode.constants import ExampleName
from termcode.dsl import parse
from termcode.entropy import shannon_bound, system_bound
from termcode.exceptions import BudgetError
from termcode.graph import DepGraph
from termcode.ir import Constraint, DomainSizes, Var, VarDecl
from termcode.ir.terms import substitute
from termcode.normalization import normalize_and_diversify
from termcode.search import guess_at_sizes


def get_relabeled(system, seed):
    """Renames the variables by a random permutation and reverses every declaration order"""
    names = list(system.var_names)
    shuffled = names[:]
    random.Random(seed).shuffle(shuffled)
    renamed = {old: f"w_{new}" for old, new in zip(names, shuffled)}
    terms = {old: Var(new) for old, new in renamed.items()}

    def relabel(constraint):
        return Constraint(
            constraint.kind, substitute(constraint.lhs, terms), substitute(constraint.rhs, terms)
        )

    return system.evolve(
        vars=tuple(VarDecl(renamed[var.name], var.sort) for var in reversed(system.vars)),
        equations=tuple(relabel(equation) for equation in reversed(system.equations)),
        disequalities=tuple(relabel(neq) for neq in reversed(system.disequalities)),
    )


@pytest.mark.parametrize(
    "name, expected",
    [
        (ExampleName.NETWORK_CODING, Fraction(2)),
        (ExampleName.UNSOLVABLE_V1, Fraction(2)),
        (ExampleName.C5, Fraction(5, 2)),
        (ExampleName.TWO_NODE_MULTISORT, Fraction(1)),
    ],
)
def test_system_bound__catalog(name, expected):
    assert system_bound(gen(name), uniform=2).normalised_bound == expected


@pytest.mark.parametrize("n", [2, 3])
def test_system_bound__does_not_depend_on_a_uniform_size(n):
    assert system_bound(gen(ExampleName.C5), uniform=n).normalised_bound == Fraction(5, 2)


def test_system_bound__certificate_covers_the_full_vertex_set():
    result = system_bound(gen(ExampleName.C5), uniform=2)
    full = max(result.certificate, key=len)
    assert result.certificate[full] == result.max_joint
    assert result.certificate_json()[",".join(full)] == "5/2"


def test_system_bound__mixed_sizes_match_the_two_node_guess():
    system = gen(ExampleName.TWO_NODE_MULTISORT)
    sizes = {"S1": 2, "S2": 4}
    bound = system_bound(system, sizes).normalised_bound
    guess = guess_at_sizes(system, sizes)
    assert bound == Fraction(2, 3)
    assert guess.value == pytest.approx(float(bound))
    assert guess.value == pytest.approx(math.log(2) / math.log(math.sqrt(8)))


def test_system_bound__vertex_cap():
    with pytest.raises(BudgetError):
        system_bound(gen(ExampleName.UNSOLVABLE_V2), uniform=2, vertex_cap=4)


@pytest.mark.parametrize(
    "name", [ExampleName.NETWORK_CODING, ExampleName.UNSOLVABLE_V1, ExampleName.C5]
)
@pytest.mark.parametrize("seed", range(3))
def test_shannon_bound__invariant_under_relabeling(name, seed):
    diversified, _, _ = normalize_and_diversify(gen(name))
    relabeled = get_relabeled(diversified, seed)
    bound = shannon_bound(
        DepGraph.build(diversified), DomainSizes.for_system(diversified, uniform=2)
    ).normalised_bound
    relabeled_bound = shannon_bound(
        DepGraph.build(relabeled), DomainSizes.for_system(relabeled, uniform=2)
    ).normalised_bound
    assert relabeled_bound == bound


@pytest.mark.parametrize("extra", ["eq h1(x,z) = y", "eq h1(x,z) = w"])
def test_system_bound__repeated_equations_collapse(extra):
    text = source(ExampleName.NETWORK_CODING)
    if "w" in extra:
        text = text.replace("var x y z : A", "var x y z w : A")
    system = parse(f"{text}\n{extra}\n")
    diversified, _, _ = normalize_and_diversify(system)
    assert sorted(DepGraph.build(diversified).vertices) == ["x", "y", "z"]
    assert system_bound(system, uniform=2).normalised_bound == Fraction(2)
