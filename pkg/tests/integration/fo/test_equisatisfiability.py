import random

import pytest

from termcode.fo import compile_problem, compiled_has_model, has_model_up_to, parse_fo

SIGNATURE = "sort A\nrel P : A\nrel Q : A A\n"
VARIABLES = ("u", "v")


def get_random_matrix(rng, depth, scope):
    if depth == 0 or rng.random() < 0.3:
        kind = rng.choice(("P", "Q", "eq"))
        if kind == "P":
            return f"P({rng.choice(scope)})"
        first, second = rng.choice(scope), rng.choice(scope)
        return f"Q({first}, {second})" if kind == "Q" else f"{first} = {second}"
    connective = rng.choice(("&", "|", "->", "~"))
    if connective == "~":
        return f"~({get_random_matrix(rng, depth - 1, scope)})"
    left = get_random_matrix(rng, depth - 1, scope)
    right = get_random_matrix(rng, depth - 1, scope)
    return f"({left}) {connective} ({right})"


def get_random_sentence(seed):
    """Two quantifiers over u and v around a random quantifier-free matrix"""
    rng = random.Random(seed)
    matrix = get_random_matrix(rng, 2, VARIABLES)
    first, second = rng.choice(("forall", "exists")), rng.choice(("forall", "exists"))
    return f"{first} u:A. {second} v:A. {matrix}"


@pytest.mark.parametrize("seed", range(100))
def test_compiled_has_model__agrees_with_finite_models_up_to_two(seed):
    problem = parse_fo(f"{SIGNATURE}sentence {get_random_sentence(seed)}\n")
    output = compile_problem(problem)
    for n in (1, 2):
        assert compiled_has_model(output, n) == has_model_up_to(problem, n), (n, problem.sentence)
