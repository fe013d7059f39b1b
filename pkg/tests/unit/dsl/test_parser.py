import pytest

from termcode.dsl import SourceSpan, parse, parse_file
from termcode.exceptions import ParseError, ValidationError
from termcode.ir import app
from termcode.ir.terms import Var
from tests import ILL_TYPED_PATH, MISSING_PAREN_PATH, NAND_PATH, STEINER_PATH


def test_parse_file__steiner():
    system = parse_file(STEINER_PATH)
    assert system.sort_names == ["A"]
    assert system.func("f").arg_sorts == ("A", "A")
    assert system.var_names == ["x", "y"]
    assert [str(eq) for eq in system.equations] == [
        "f(x,x) = x",
        "f(x,y) = f(y,x)",
        "f(x,f(x,y)) = y",
    ]
    assert system.disequalities == ()


def test_parse_file__constants_disequalities_and_outputs():
    system = parse_file(NAND_PATH)
    assert system.func("c").arity == 0
    assert [str(neq) for neq in system.disequalities] == ["S(c,c) != c"]
    assert system.outputs == (app("S", "x", "x"), app("S", app("c"), "y"), app("S", "z", app("c")))
    assert system.is_dispersion


def test_parse__ignores_comments_blank_lines_and_carriage_returns():
    system = parse("# header\r\n\r\nsort A # the only sort\r\nvar x : A\r\neq x = x\r\n")
    assert system.var_names == ["x"]
    assert system.equations[0].lhs == Var("x")


def test_parse__accepts_output_lists_with_and_without_commas():
    text = "sort A\nfun f : A -> A\nvar x : A\nout f(x), x f(f(x))\n"
    assert len(parse(text).outputs) == 3


def test_parse_file__missing_parenthesis_reports_location():
    with pytest.raises(ParseError) as error:
        parse_file(MISSING_PAREN_PATH)
    assert error.value.span.line == 4
    assert "line 4" in str(error.value)


@pytest.mark.parametrize(
    "text, expected_span",
    [
        ("sort A\nvar x : A\neq x = f(x\n", SourceSpan(3, 9, 1)),
        ("sort A\nvar x : A\neq f(x = x\n", SourceSpan(3, 8, 1)),
        ("sort A\nvar x : A\neq x = z\n", SourceSpan(3, 8, 1)),
        ("sort A\nwhatever A\n", SourceSpan(2, 1, 8)),
        ("sort A\nvar x : A\neq x $ x\n", SourceSpan(3, 6, 1)),
        ("sort A\nvar x : A\neq x =\n", SourceSpan(3, 7, 1)),
    ],
)
def test_parse__syntax_errors(text, expected_span):
    with pytest.raises(ParseError) as error:
        parse(text)
    assert error.value.span == expected_span


def test_parse__unknown_function_symbol():
    with pytest.raises(ParseError):
        parse("sort A\nvar x : A\neq g(x) = x\n")


def test_parse_file__ill_typed_system_raises_validation_error():
    with pytest.raises(ValidationError) as error:
        parse_file(ILL_TYPED_PATH)
    assert "sort-mismatch" in error.value.report.codes


def test_parse__validation_can_be_skipped():
    system = parse_file(ILL_TYPED_PATH, validate=False)
    assert len(system.equations) == 1


def test_source_span__to_dict():
    assert SourceSpan(2, 7, 3).to_dict() == {"line": 2, "column": 7, "length": 3}
