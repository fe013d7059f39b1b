from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from termcode.exceptions import CompileError
from termcode.ir.System import FuncSymbol
from termcode.ir.terms import App, Term, Var, free_vars, iter_subterms, substitute


@dataclass(frozen=True)
class Pred:
    """A relation atom R(t_1, ..., t_k)"""

    name: str
    args: Tuple[Term, ...] = ()

    def __str__(self):
        if not self.args:
            return self.name
        return f"{self.name}({','.join(str(arg) for arg in self.args)})"


@dataclass(frozen=True)
class Equals:
    lhs: Term
    rhs: Term

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class Not:
    body: "Formula"

    def __str__(self):
        return f"~{_wrap(self.body)}"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"{_wrap(self.left)} & {_wrap(self.right)}"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"{_wrap(self.left)} | {_wrap(self.right)}"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"{_wrap(self.left)} -> {_wrap(self.right)}"


@dataclass(frozen=True)
class Forall:
    var: str
    sort: str
    body: "Formula"

    def __str__(self):
        return f"forall {self.var}:{self.sort}. {self.body}"


@dataclass(frozen=True)
class Exists:
    var: str
    sort: str
    body: "Formula"

    def __str__(self):
        return f"exists {self.var}:{self.sort}. {self.body}"


Atom = Union[Pred, Equals]
Formula = Union[Pred, Equals, Not, And, Or, Implies, Forall, Exists]
Quantifier = Union[Forall, Exists]


def _wrap(formula: "Formula") -> str:
    if isinstance(formula, (Pred, Equals, Not)):
        return str(formula)
    return f"({formula})"


def conjunction(formulas: List[Formula]) -> Formula:
    """Right-nested conjunction of a non-empty list"""
    result = formulas[-1]
    for formula in reversed(formulas[:-1]):
        result = And(formula, result)
    return result


def is_atom(formula: Formula) -> bool:
    return isinstance(formula, (Pred, Equals))


def atom_terms(atom: Atom) -> Tuple[Term, ...]:
    return atom.args if isinstance(atom, Pred) else (atom.lhs, atom.rhs)


def substitute_formula(formula: Formula, mapping: Dict[str, Term]) -> Formula:
    """Replaces free variables; binders shadow the mapping"""
    if isinstance(formula, Pred):
        return Pred(formula.name, tuple(substitute(arg, mapping) for arg in formula.args))
    if isinstance(formula, Equals):
        return Equals(substitute(formula.lhs, mapping), substitute(formula.rhs, mapping))
    if isinstance(formula, Not):
        return Not(substitute_formula(formula.body, mapping))
    if isinstance(formula, (And, Or, Implies)):
        return type(formula)(
            substitute_formula(formula.left, mapping), substitute_formula(formula.right, mapping)
        )
    inner = {name: term for name, term in mapping.items() if name != formula.var}
    return type(formula)(formula.var, formula.sort, substitute_formula(formula.body, inner))


def iter_atoms(formula: Formula) -> Iterator[Atom]:
    if is_atom(formula):
        yield formula
    elif isinstance(formula, Not):
        yield from iter_atoms(formula.body)
    elif isinstance(formula, (And, Or, Implies)):
        yield from iter_atoms(formula.left)
        yield from iter_atoms(formula.right)
    else:
        yield from iter_atoms(formula.body)


def formula_free_vars(formula: Formula) -> List[str]:
    if is_atom(formula):
        names: List[str] = []
        for term in atom_terms(formula):
            names.extend(name for name in free_vars(term) if name not in names)
        return names
    if isinstance(formula, Not):
        return formula_free_vars(formula.body)
    if isinstance(formula, (And, Or, Implies)):
        left = formula_free_vars(formula.left)
        return left + [name for name in formula_free_vars(formula.right) if name not in left]
    return [name for name in formula_free_vars(formula.body) if name != formula.var]


@dataclass
class Signature:
    """
    Sorts, relation symbols and function symbols of a first-order language

    Attributes
    ----------
    relations
        Relation name -> argument sorts

    functions
        Function name -> typed symbol, constants included
    """

    sorts: List[str] = field(default_factory=list)
    relations: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    functions: Dict[str, FuncSymbol] = field(default_factory=dict)

    def names(self) -> set:
        return set(self.sorts) | set(self.relations) | set(self.functions)

    def with_functions(self, extra: List[FuncSymbol]) -> "Signature":
        functions = dict(self.functions)
        functions.update({func.name: func for func in extra})
        return Signature(list(self.sorts), dict(self.relations), functions)


@dataclass
class FOProblem:
    """A first-order sentence over a declared signature"""

    signature: Signature
    sentence: Formula

    def __post_init__(self):
        check_sentence(self.signature, self.sentence)


def term_sort_in(term: Term, signature: Signature, scope: Mapping[str, str]) -> str:
    """
    Sort of a term under a signature and the sorts of the bound variables in scope

    Raises
    ------
    CompileError
        For unbound variables, unknown symbols or argument sort mismatches
    """
    if isinstance(term, Var):
        if term.name not in scope:
            raise CompileError(f"Variable '{term.name}' is not bound by a quantifier")
        return scope[term.name]

    func = signature.functions.get(term.func)
    if func is None:
        raise CompileError(f"Unknown function symbol '{term.func}'")
    _check_args(term.func, func.arg_sorts, term.args, signature, scope)
    return func.result_sort


def _check_args(name, expected, args, signature, scope):
    if len(args) != len(expected):
        raise CompileError(f"'{name}' expects {len(expected)} arguments, got {len(args)}")
    for position, (sort, arg) in enumerate(zip(expected, args), start=1):
        found = term_sort_in(arg, signature, scope)
        if found != sort:
            raise CompileError(
                f"Argument {position} of '{name}' has sort {found}, expected {sort}"
            )


def check_formula(
    formula: Formula, signature: Signature, scope: Optional[Mapping[str, str]] = None
):
    """Type-checks a formula against a signature"""
    scope = dict(scope or {})
    if isinstance(formula, Pred):
        if formula.name not in signature.relations:
            raise CompileError(f"Unknown relation symbol '{formula.name}'")
        _check_args(formula.name, signature.relations[formula.name], formula.args, signature, scope)
    elif isinstance(formula, Equals):
        lhs = term_sort_in(formula.lhs, signature, scope)
        rhs = term_sort_in(formula.rhs, signature, scope)
        if lhs != rhs:
            raise CompileError(f"Equality between sorts {lhs} and {rhs} in '{formula}'")
    elif isinstance(formula, Not):
        check_formula(formula.body, signature, scope)
    elif isinstance(formula, (And, Or, Implies)):
        check_formula(formula.left, signature, scope)
        check_formula(formula.right, signature, scope)
    else:
        if formula.sort not in signature.sorts:
            raise CompileError(f"Unknown sort '{formula.sort}' for variable '{formula.var}'")
        check_formula(formula.body, signature, {**scope, formula.var: formula.sort})


def check_sentence(signature: Signature, sentence: Formula):
    free = formula_free_vars(sentence)
    if free:
        raise CompileError(f"Sentence has free variables {free}")
    check_formula(sentence, signature)


def used_functions(formulas: List[Formula]) -> List[str]:
    names: List[str] = []
    for formula in formulas:
        for atom in iter_atoms(formula):
            for term in atom_terms(atom):
                for subterm in iter_subterms(term):
                    if isinstance(subterm, App) and subterm.func not in names:
                        names.append(subterm.func)
    return names
