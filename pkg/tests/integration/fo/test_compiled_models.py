import pytest

from termcode.catalog.witnesses import STEINER_TABLES
from termcode.fo import (
    compile_problem,
    compiled_has_model,
    compiled_model,
    has_model_up_to,
    parse_fo,
    parse_fo_file,
)
from termcode.search import find_model
from tests import EMPTY_DOMAIN_FO_PATH, INVERSE_FO_PATH, STEINER_FO_PATH

SIGNATURE = "sort A\nrel P : A\nrel Q : A A\n"

SENTENCES = [
    "forall x:A. exists y:A. Q(x, y) & ~Q(y, x)",
    "exists x:A. exists y:A. x != y",
    "forall x:A. P(x) | ~P(x)",
    "(exists x:A. P(x)) & (exists x:A. ~P(x))",
    "forall x:A. forall y:A. x = y",
    "forall x:A. exists y:A. Q(x, y) & x != y",
    "forall x:A. forall y:A. Q(x, y) -> Q(y, x)",
    "exists x:A. P(x) & (forall y:A. Q(x, y) -> ~P(y))",
    "forall x:A. ~Q(x, x) & (exists y:A. Q(y, x))",
]


@pytest.mark.parametrize("sentence", SENTENCES)
@pytest.mark.parametrize("n", [1, 2])
def test_compiled_has_model__agrees_with_structure_enumeration(sentence, n):
    problem = parse_fo(f"{SIGNATURE}sentence {sentence}\n")
    assert compiled_has_model(compile_problem(problem), n) == has_model_up_to(problem, n)


def test_compile_problem__steiner_sentence_with_pinned_quasigroup():
    output = compile_problem(parse_fo_file(STEINER_FO_PATH))
    assert output.system.var_names == ["x", "x_2", "y", "x_3", "y_2", "a1", "a2", "a3", "a4"]
    assert len(output.trace.clauses) == 3
    assert len(output.trace.congruence) == 4

    fixed = {**output.fixed_tables, "f": STEINER_TABLES[3]}
    model = find_model(output.system, output.sizes(3), fixed=fixed)
    assert model is not None
    assert model.tables[output.relations["E_A"]].shape == (3, 3)


def test_compiled_model__inverse_has_no_fixed_points():
    output = compile_problem(parse_fo_file(INVERSE_FO_PATH))
    model = compiled_model(output, 2)
    g = model.tables["g"]
    assert all(g[x] != x for x in range(2))


@pytest.mark.parametrize("n", [1, 2])
def test_compiled_has_model__empty_domain_never_holds(n):
    output = compile_problem(parse_fo_file(EMPTY_DOMAIN_FO_PATH))
    assert not compiled_has_model(output, n)
