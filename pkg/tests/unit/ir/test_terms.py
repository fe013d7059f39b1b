import pytest

from termcode.ir.terms import (
    App,
    Var,
    app,
    depth,
    free_vars,
    function_names,
    iter_subterms,
    rename_functions,
    substitute,
)


def get_steiner_inverse_term():
    return app("f", "x", app("f", "x", "y"))


def test_app__turns_strings_into_variables():
    assert app("f", "x", "y") == App("f", (Var("x"), Var("y")))


def test_app__constants_have_no_arguments():
    constant = app("c")
    assert constant.is_constant
    assert str(constant) == "c"


def test_str():
    assert str(get_steiner_inverse_term()) == "f(x,f(x,y))"


def test_iter_subterms__visits_arguments_first():
    subterms = [str(term) for term in iter_subterms(get_steiner_inverse_term())]
    assert subterms == ["x", "x", "y", "f(x,y)", "f(x,f(x,y))"]


def test_free_vars__keeps_first_occurrence_order():
    assert free_vars(app("f", "y", app("g", "x", "y"))) == ["y", "x"]


def test_function_names():
    assert function_names(app("f", app("g", "x"), app("g", app("c")))) == ["g", "c", "f"]


@pytest.mark.parametrize(
    "term, expected_depth",
    [
        (Var("x"), 0),
        (app("c"), 0),
        (app("f", "x", "y"), 1),
        (get_steiner_inverse_term(), 2),
    ],
)
def test_depth(term, expected_depth):
    assert depth(term) == expected_depth


def test_substitute():
    result = substitute(get_steiner_inverse_term(), {"y": app("g", "x")})
    assert str(result) == "f(x,f(x,g(x)))"


def test_rename_functions__renames_every_application():
    renamed = rename_functions(get_steiner_inverse_term(), lambda term: term.func.upper())
    assert str(renamed) == "F(x,F(x,y))"


def test_terms_are_hashable():
    assert len({app("f", "x"), app("f", "x"), app("f", "y")}) == 2
