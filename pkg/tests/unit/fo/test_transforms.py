import pytest

from termcode.exceptions import BudgetError, CompileError
from termcode.fo import expand_equality, skolemize, to_cnf, to_prenex
from termcode.fo.formulas import And, Exists, Forall, Not, Pred
from termcode.fo.parser import parse_formula, signature_from
from termcode.fo.transforms import (
    Literal,
    clause_to_text,
    rename_apart,
    split_prefix,
    to_nnf,
)
from termcode.ir.System import FuncSymbol
from termcode.ir.terms import App, Var


def get_signature(**relations):
    relations = relations or {"P": ("A",), "Q": ("A", "A")}
    return signature_from(
        ["A", "B"],
        relations,
        [
            FuncSymbol("g", ("A",), "A"),
            FuncSymbol("h", ("A",), "B"),
            FuncSymbol("c", (), "A"),
        ],
    )


def get_formula(text, **relations):
    return parse_formula(text, get_signature(**relations))


def get_clauses(text, **relations):
    return to_cnf(get_formula(text, **relations))


def test_rename_apart__repeated_binders_get_fresh_names():
    formula = rename_apart(get_formula("(forall x:A. P(x)) & (forall x:A. Q(x, x))"))
    assert formula == And(
        Forall("x", "A", Pred("P", (Var("x"),))),
        Forall("x_2", "A", Pred("Q", (Var("x_2"), Var("x_2")))),
    )


@pytest.mark.parametrize(
    "text, expected",
    [
        ("~(forall x:A. P(x))", "exists x:A. ~P(x)"),
        ("(exists x:A. P(x)) -> P(c)", "forall x:A. P(x) -> P(c)"),
        ("forall x:A. P(x) | (exists y:A. Q(x, y))", "forall x:A. exists y:A. P(x) | Q(x,y)"),
        ("(forall x:A. P(x)) & (exists x:A. ~P(x))", "forall x:A. exists x_2:A. P(x) & ~P(x_2)"),
    ],
)
def test_to_prenex(text, expected):
    assert str(to_prenex(get_formula(text))) == expected


def test_to_prenex__matrix_is_quantifier_free():
    prefix, matrix = split_prefix(to_prenex(get_formula("~((exists x:A. P(x)) | forall y:A. P(y))")))
    assert [(kind, var) for kind, var, _ in prefix] == [(Forall, "x"), (Exists, "y")]
    assert str(matrix) == "~(P(x) | P(y))"


def test_skolemize__existential_after_universal_becomes_a_function():
    formula, functions = skolemize(to_prenex(get_formula("forall x:A. exists y:A. Q(x, y)")))
    assert functions == [FuncSymbol("sk0", ("A",), "A")]
    assert formula == Forall("x", "A", Pred("Q", (Var("x"), App("sk0", (Var("x"),)))))


def test_skolemize__leading_existential_becomes_a_constant():
    formula, functions = skolemize(to_prenex(get_formula("exists y:A. forall x:A. Q(x, y)")))
    assert functions == [FuncSymbol("sk0", (), "A")]
    assert formula == Forall("x", "A", Pred("Q", (Var("x"), App("sk0"))))


def test_skolemize__avoids_taken_names():
    _, functions = skolemize(
        to_prenex(get_formula("exists y:A. exists z:A. Q(y, z)")), taken={"sk0", "sk2"}
    )
    assert [func.name for func in functions] == ["sk1", "sk3"]


def test_skolemize__requires_prenex_form():
    with pytest.raises(CompileError):
        skolemize(get_formula("forall x:A. P(x) & (exists y:A. P(y))"))


def test_to_nnf__pushes_negation_through_implication():
    formula = to_nnf(get_formula("~(P(c) -> Q(c, c))"))
    assert formula == And(Pred("P", (App("c"),)), Not(Pred("Q", (App("c"), App("c")))))


def test_to_nnf__rejects_quantifiers():
    with pytest.raises(CompileError):
        to_nnf(get_formula("~(forall x:A. P(x))"))


def test_to_cnf__distributes_disjunction():
    clauses = get_clauses("forall x:A. (P(x) & Q(x, x)) | P(c)")
    assert [clause_to_text(clause) for clause in clauses] == ["P(x) | P(c)", "Q(x,x) | P(c)"]


def test_to_cnf__drops_repeated_literals():
    assert get_clauses("P(c) | ~P(c) | P(c)") == [
        (Literal(Pred("P", (App("c"),))), Literal(Pred("P", (App("c"),)), positive=False))
    ]


def test_to_cnf__rejects_existentials():
    with pytest.raises(CompileError):
        get_clauses("exists x:A. P(x)")


def test_to_cnf__clause_cap():
    formula = get_formula("(P(c) & P(g(c))) | (Q(c, c) & Q(c, g(c)))")
    assert len(to_cnf(formula, clause_cap=4)) == 4
    with pytest.raises(BudgetError):
        to_cnf(formula, clause_cap=3)


def test_clause_to_text__empty_clause_is_false():
    assert clause_to_text(()) == "false"


def test_literal__negated():
    literal = Literal(Pred("P", (App("c"),)))
    assert str(literal.negated()) == "~P(c)"
    assert literal.negated().negated() == literal


def test_expand_equality__congruence_axioms():
    expansion = expand_equality(
        get_clauses("forall x:A. g(x) = x | P(x)"), get_signature(), {"x": "A"}
    )
    assert expansion.relations == {"A": "E_A"}
    assert [clause_to_text(clause) for clause in expansion.clauses] == ["E_A(g(x),x) | P(x)"]
    assert [clause_to_text(clause) for clause in expansion.axioms] == [
        "E_A(a1,a1)",
        "~E_A(a1,a2) | E_A(a2,a1)",
        "~E_A(a1,a2) | ~E_A(a2,a3) | E_A(a1,a3)",
        "~E_A(a1,a2) | E_A(g(a1),g(a2))",
        "~E_A(a1,a2) | ~P(a1) | P(a2)",
    ]
    assert expansion.variables == [("a1", "A"), ("a2", "A"), ("a3", "A")]


def test_expand_equality__binary_relation_draws_four_variables():
    expansion = expand_equality(
        get_clauses("forall x:A. Q(x, x) | ~(x = c)"), get_signature(), {"x": "A"}
    )
    assert clause_to_text(expansion.axioms[-1]) == (
        "~E_A(a1,a2) | ~E_A(a3,a4) | ~Q(a1,a3) | Q(a2,a4)"
    )
    assert [name for name, _ in expansion.variables] == ["a1", "a2", "a3", "a4"]


def test_expand_equality__without_equality_is_unchanged():
    clauses = get_clauses("forall x:A. P(x) | Q(x, c)")
    expansion = expand_equality(clauses, get_signature(), {"x": "A"})
    assert expansion.clauses == clauses
    assert expansion.axioms == []
    assert expansion.relations == {}


def test_expand_equality__closes_over_function_result_sorts():
    expansion = expand_equality(
        get_clauses("forall x:A. S(h(x)) | x = c", S=("B",)),
        get_signature(S=("B",)),
        {"x": "A"},
    )
    assert expansion.relations == {"A": "E_A", "B": "E_B"}
    assert "~E_A(a1,a2) | E_B(h(a1),h(a2))" in [
        clause_to_text(clause) for clause in expansion.axioms
    ]
    assert "~E_B(b1,b2) | ~S(b1) | S(b2)" in [
        clause_to_text(clause) for clause in expansion.axioms
    ]


def test_expand_equality__fresh_relation_names():
    expansion = expand_equality(
        get_clauses("forall x:A. E_A(x) | x = c", E_A=("A",)),
        get_signature(E_A=("A",)),
        {"x": "A"},
    )
    assert expansion.relations == {"A": "E_A_2"}
