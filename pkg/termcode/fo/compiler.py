"""
Compiles a first-order sentence into a multi-sorted term coding system.

A Bool sort with constants T and F and truth-table equations for NOT and AND carries the
truth values; OR is expanded as NOT(AND(NOT(a), NOT(b))). Each relation R becomes a
characteristic function f_R into Bool, every CNF clause one equation ClauseTerm = T, and the
only disequality is T != F. The sentence has a model of size at most n iff the compiled system
has an interpretation of size n, with Bool of size 2, under which every assignment is a
solution.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from termcode.constants import DEFAULT_CLAUSE_CAP
from termcode.fo.formulas import FOProblem, Formula, Pred, Signature, check_sentence
from termcode.fo.transforms import (
    Clause,
    Literal,
    clause_to_text,
    expand_equality,
    skolemize,
    split_prefix,
    to_cnf,
    to_prenex,
)
from termcode.ir.System import Constraint, FuncSymbol, SortDecl, System, VarDecl
from termcode.ir.terms import App, Term, iter_subterms
from termcode.ir.validation import validate_system
from termcode.mixins.Persistable import Persistable
from termcode.utilities.general import fresh_name

logger = logging.getLogger(__name__)

BOOL_SORT = "Bool"
TRUE, FALSE, NOT, AND = "T", "F", "NOT", "AND"


@dataclass
class CompileTrace(Persistable):
    """Intermediate artifacts of one compilation, kept as text"""

    prenex: str = ""
    skolemized: str = ""
    skolem_functions: List[str] = field(default_factory=list)
    clauses: List[str] = field(default_factory=list)
    congruence: List[str] = field(default_factory=list)
    equations: List[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "prenex": self.prenex,
            "skolemized": self.skolemized,
            "skolem_functions": self.skolem_functions,
            "clauses": self.clauses,
            "congruence": self.congruence,
            "equations": self.equations,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "CompileTrace":
        return cls(**data)


@dataclass
class CompileOutput:
    """
    Attributes
    ----------
    system
        The compiled term coding system

    trace
        Prenex form, Skolem form, clause lists and the clause equations

    bool_sort
        Name of the truth value sort, intended size 2

    symbols
        Names of the Boolean symbols T, F, NOT and AND in the compiled system

    relations
        Relation name -> its characteristic function, congruence relations included
    """

    system: System
    trace: CompileTrace
    bool_sort: str
    symbols: Dict[str, str]
    relations: Dict[str, str]

    @property
    def fixed_tables(self) -> Dict[str, np.ndarray]:
        """The standard Boolean tables with F = 0 and T = 1"""
        return {
            self.symbols[TRUE]: np.array(1),
            self.symbols[FALSE]: np.array(0),
            self.symbols[NOT]: np.array([1, 0]),
            self.symbols[AND]: np.array([[0, 0], [0, 1]]),
        }

    def sizes(self, n: int, overrides: Optional[Mapping[str, int]] = None) -> Dict[str, int]:
        sizes = {sort: n for sort in self.system.sort_names}
        sizes.update(overrides or {})
        sizes[self.bool_sort] = 2
        return sizes

    def target_count(self, sizes: Mapping[str, int]) -> int:
        """Solution count meaning every assignment satisfies every clause"""
        return math.prod(sizes[var.sort] for var in self.system.vars)


class _Builder:
    def __init__(self, taken: set):
        self.taken = taken
        self.bool_sort = self.fresh(BOOL_SORT)
        self.symbols = {name: self.fresh(name) for name in (TRUE, FALSE, NOT, AND)}
        self.relations: Dict[str, str] = {}
        self.relation_sorts: Dict[str, Tuple[str, ...]] = {}

    def fresh(self, name: str) -> str:
        name = fresh_name(name, self.taken)
        self.taken.add(name)
        return name

    @property
    def true(self) -> App:
        return App(self.symbols[TRUE])

    @property
    def false(self) -> App:
        return App(self.symbols[FALSE])

    def negate(self, term: Term) -> App:
        return App(self.symbols[NOT], (term,))

    def conjoin(self, left: Term, right: Term) -> App:
        return App(self.symbols[AND], (left, right))

    def disjoin(self, left: Term, right: Term) -> App:
        return self.negate(self.conjoin(self.negate(left), self.negate(right)))

    def relation(self, name: str, arg_sorts: Tuple[str, ...]) -> str:
        if name not in self.relations:
            self.relations[name] = self.fresh(f"f_{name}")
            self.relation_sorts[name] = arg_sorts
        return self.relations[name]

    def literal(self, literal: Literal, relation_sorts: Mapping[str, Tuple[str, ...]]) -> Term:
        atom: Pred = literal.atom
        term = App(self.relation(atom.name, relation_sorts[atom.name]), atom.args)
        return term if literal.positive else self.negate(term)

    def clause_term(self, clause: Clause, relation_sorts) -> Term:
        """Right-nested disjunction of the literals; the empty clause is F"""
        if not clause:
            return self.false
        terms = [self.literal(literal, relation_sorts) for literal in clause]
        result = terms[-1]
        for term in reversed(terms[:-1]):
            result = self.disjoin(term, result)
        return result

    def truth_tables(self) -> List[Constraint]:
        t, f = self.true, self.false
        return [
            Constraint.eq(self.negate(t), f),
            Constraint.eq(self.negate(f), t),
            Constraint.eq(self.conjoin(t, t), t),
            Constraint.eq(self.conjoin(t, f), f),
            Constraint.eq(self.conjoin(f, t), f),
            Constraint.eq(self.conjoin(f, f), f),
        ]

    def bool_functions(self) -> List[FuncSymbol]:
        b = self.bool_sort
        return [
            FuncSymbol(self.symbols[TRUE], (), b),
            FuncSymbol(self.symbols[FALSE], (), b),
            FuncSymbol(self.symbols[NOT], (b,), b),
            FuncSymbol(self.symbols[AND], (b, b), b),
        ]


def _used_function_names(equations: List[Constraint]) -> List[str]:
    names: List[str] = []
    for equation in equations:
        for side in (equation.lhs, equation.rhs):
            for subterm in iter_subterms(side):
                if isinstance(subterm, App) and subterm.func not in names:
                    names.append(subterm.func)
    return names


def compile_sentence(
    signature: Signature, sentence: Formula, clause_cap: int = DEFAULT_CLAUSE_CAP
) -> CompileOutput:
    """
    Runs the whole pipeline: prenex form, Skolemisation, CNF, equality replacement and the
    translation of clauses into equations over a Bool sort.

    Only symbols occurring in the clauses are declared in the compiled system, every sort of
    the signature is kept.

    Raises
    ------
    CompileError
        For sentences with free variables or typing errors

    BudgetError
        When the CNF exceeds the clause cap
    """
    check_sentence(signature, sentence)
    taken = set(signature.names())

    prenex = to_prenex(sentence)
    universal, skolem_functions = skolemize(prenex, taken)
    taken.update(func.name for func in skolem_functions)
    extended = signature.with_functions(skolem_functions)

    prefix, _ = split_prefix(universal)
    scope = {var: sort for _, var, sort in prefix}
    taken.update(scope)
    clauses = to_cnf(universal, clause_cap)
    expansion = expand_equality(clauses, extended, scope, taken)
    taken.update(expansion.relations.values())
    taken.update(name for name, _ in expansion.variables)

    relation_sorts = dict(extended.relations)
    relation_sorts.update({name: (sort, sort) for sort, name in expansion.relations.items()})

    builder = _Builder(taken)
    clause_equations = [
        Constraint.eq(builder.clause_term(clause, relation_sorts), builder.true)
        for clause in expansion.clauses + expansion.axioms
    ]

    used = _used_function_names(clause_equations)
    object_functions = [
        extended.functions[name] for name in extended.functions if name in used
    ]
    relation_functions = [
        FuncSymbol(builder.relations[name], builder.relation_sorts[name], builder.bool_sort)
        for name in builder.relations
    ]
    variables = [VarDecl(var, sort) for var, sort in scope.items()]
    variables += [VarDecl(var, sort) for var, sort in expansion.variables]

    system = System(
        sorts=tuple(SortDecl(sort) for sort in signature.sorts) + (SortDecl(builder.bool_sort),),
        funcs=tuple(builder.bool_functions() + object_functions + relation_functions),
        vars=tuple(variables),
        equations=tuple(builder.truth_tables() + clause_equations),
        disequalities=(Constraint.neq(builder.true, builder.false),),
    )
    validate_system(system).raise_for_issues()

    trace = CompileTrace(
        prenex=str(prenex),
        skolemized=str(universal),
        skolem_functions=[
            " ".join([func.name, ":", *func.arg_sorts, "->", func.result_sort])
            for func in skolem_functions
        ],
        clauses=[clause_to_text(clause) for clause in expansion.clauses],
        congruence=[clause_to_text(clause) for clause in expansion.axioms],
        equations=[str(equation) for equation in clause_equations],
    )
    relations = dict(builder.relations)
    logger.debug(
        "compiled %d clauses and %d congruence clauses into %d equations over %d variables",
        len(expansion.clauses),
        len(expansion.axioms),
        len(system.equations),
        len(system.vars),
    )
    return CompileOutput(system, trace, builder.bool_sort, dict(builder.symbols), relations)


def compile_problem(problem: FOProblem, clause_cap: int = DEFAULT_CLAUSE_CAP) -> CompileOutput:
    return compile_sentence(problem.signature, problem.sentence, clause_cap)
