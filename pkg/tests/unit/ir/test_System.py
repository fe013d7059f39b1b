import pytest

from termcode.exceptions import ParameterError
from termcode.ir import Constraint, DomainSizes, FuncSymbol, SortDecl, System, VarDecl, app
from termcode.ir.terms import Var


def get_steiner_system():
    return System(
        sorts=(SortDecl("A"),),
        funcs=(FuncSymbol("f", ("A", "A"), "A"),),
        vars=(VarDecl("x", "A"), VarDecl("y", "A")),
        equations=(
            Constraint.eq(app("f", "x", "x"), Var("x")),
            Constraint.eq(app("f", "x", "y"), app("f", "y", "x")),
            Constraint.eq(app("f", "x", app("f", "x", "y")), Var("y")),
        ),
    )


def get_two_sorted_system():
    return System(
        sorts=(SortDecl("S1"), SortDecl("S2")),
        funcs=(
            FuncSymbol("f1", ("S2",), "S1"),
            FuncSymbol("f2", ("S1",), "S2"),
            FuncSymbol("unused", (), "S1"),
        ),
        vars=(VarDecl("X", "S1"), VarDecl("Y", "S2")),
        equations=(
            Constraint.eq(app("f1", "Y"), Var("X")),
            Constraint.eq(app("f2", "X"), Var("Y")),
        ),
    )


def test_system__accessors():
    system = get_steiner_system()
    assert system.sort_names == ["A"]
    assert system.var_names == ["x", "y"]
    assert system.func_names == ["f"]
    assert system.var_sorts == {"x": "A", "y": "A"}
    assert system.func("f").arity == 2
    assert not system.is_dispersion
    assert system.names() == {"A", "f", "x", "y"}


def test_system__unknown_function_raises_parameter_error():
    with pytest.raises(ParameterError):
        get_steiner_system().func("g")


def test_system__converts_lists_to_tuples():
    system = System(sorts=[SortDecl("A")], vars=[VarDecl("x", "A")])
    assert isinstance(system.sorts, tuple)
    assert isinstance(system.vars, tuple)


def test_constraint__str():
    assert str(Constraint.eq(app("f", "x"), Var("y"))) == "f(x) = y"
    assert str(Constraint.neq(Var("x"), Var("y"))) == "x != y"


def test_used_functions__skips_unused_declarations():
    assert get_two_sorted_system().used_functions() == ["f1", "f2"]


def test_used_variables():
    system = get_steiner_system().evolve(vars=(VarDecl("x", "A"), VarDecl("y", "A"), VarDecl("z", "A")))
    assert system.used_variables() == ["x", "y"]


def test_evolve__leaves_the_original_untouched():
    system = get_steiner_system()
    evolved = system.evolve(equations=())
    assert len(system.equations) == 3
    assert evolved.equations == ()


def test_domain_sizes__uniform():
    sizes = DomainSizes.for_system(get_two_sorted_system(), uniform=3)
    assert dict(sizes) == {"S1": 3, "S2": 3}


def test_domain_sizes__explicit_sizes_override_uniform():
    sizes = DomainSizes.for_system(get_two_sorted_system(), {"S2": 5}, uniform=2)
    assert dict(sizes) == {"S1": 2, "S2": 5}
    assert sizes.var_size(get_two_sorted_system(), "Y") == 5


@pytest.mark.parametrize(
    "sizes, uniform",
    [
        ({"S3": 2}, 2),
        ({"S1": 2}, None),
        ({"S1": 0, "S2": 2}, None),
    ],
)
def test_domain_sizes__rejects_bad_sizes(sizes, uniform):
    with pytest.raises(ParameterError):
        DomainSizes.for_system(get_two_sorted_system(), sizes, uniform=uniform)


def test_domain_sizes__compare_as_mappings():
    sizes = DomainSizes({"A": 2})
    assert sizes == {"A": 2}
    assert hash(sizes) == hash(DomainSizes({"A": 2}))
