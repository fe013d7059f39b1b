"""
Clause-form pipeline for first-order sentences: prenex form, Skolemisation, CNF by
distribution, and replacement of equality by congruence relations.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from termcode.constants import DEFAULT_CLAUSE_CAP
from termcode.exceptions import BudgetError, CompileError
from termcode.fo.formulas import (
    And,
    Atom,
    Equals,
    Exists,
    Forall,
    Formula,
    Implies,
    Not,
    Or,
    Pred,
    Signature,
    is_atom,
    substitute_formula,
    term_sort_in,
)
from termcode.ir.System import FuncSymbol
from termcode.ir.terms import App, Term, Var, iter_subterms
from termcode.utilities.general import fresh_name, unique

logger = logging.getLogger(__name__)

Prefix = List[Tuple[type, str, str]]


@dataclass(frozen=True)
class Literal:
    atom: Atom
    positive: bool = True

    def negated(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    def __str__(self):
        return str(self.atom) if self.positive else f"~{self.atom}"


Clause = Tuple[Literal, ...]


def clause_to_text(clause: Clause) -> str:
    return " | ".join(str(literal) for literal in clause) if clause else "false"


def rename_apart(formula: Formula) -> Formula:
    """Gives every quantifier its own variable name; the first binder of a name keeps it"""
    taken: Set[str] = set()

    def visit(node: Formula) -> Formula:
        if is_atom(node):
            return node
        if isinstance(node, Not):
            return Not(visit(node.body))
        if isinstance(node, (And, Or, Implies)):
            return type(node)(visit(node.left), visit(node.right))
        name = fresh_name(node.var, taken)
        taken.add(name)
        body = node.body
        if name != node.var:
            body = substitute_formula(body, {node.var: Var(name)})
        return type(node)(name, node.sort, visit(body))

    return visit(formula)


def _flip(prefix: Prefix) -> Prefix:
    return [(Exists if kind is Forall else Forall, var, sort) for kind, var, sort in prefix]


def _pull(formula: Formula) -> Tuple[Prefix, Formula]:
    if is_atom(formula):
        return [], formula
    if isinstance(formula, Not):
        prefix, matrix = _pull(formula.body)
        return _flip(prefix), Not(matrix)
    if isinstance(formula, (And, Or)):
        left_prefix, left = _pull(formula.left)
        right_prefix, right = _pull(formula.right)
        return left_prefix + right_prefix, type(formula)(left, right)
    if isinstance(formula, Implies):
        left_prefix, left = _pull(formula.left)
        right_prefix, right = _pull(formula.right)
        return _flip(left_prefix) + right_prefix, Implies(left, right)
    prefix, matrix = _pull(formula.body)
    return [(type(formula), formula.var, formula.sort)] + prefix, matrix


def split_prefix(formula: Formula) -> Tuple[Prefix, Formula]:
    prefix: Prefix = []
    while isinstance(formula, (Forall, Exists)):
        prefix.append((type(formula), formula.var, formula.sort))
        formula = formula.body
    return prefix, formula


def with_prefix(prefix: Prefix, matrix: Formula) -> Formula:
    for kind, var, sort in reversed(prefix):
        matrix = kind(var, sort, matrix)
    return matrix


def to_prenex(formula: Formula) -> Formula:
    """
    Moves every quantifier to the front, keeping their left-to-right nesting order. Bound
    variables are renamed apart first, so quantifiers never capture. Non-empty domains are
    assumed throughout.
    """
    prefix, matrix = _pull(rename_apart(formula))
    return with_prefix(prefix, matrix)


def skolemize(
    formula: Formula, taken: Optional[Set[str]] = None
) -> Tuple[Formula, List[FuncSymbol]]:
    """
    Replaces each existential of a prenex sentence by a fresh function sk<k> of the universals
    before it; counters start at 0 on every call.

    Raises
    ------
    CompileError
        When the formula is not in prenex form
    """
    taken = set(taken or ())
    prefix, matrix = split_prefix(formula)
    if any(isinstance(node, (Forall, Exists)) for node in _iter_nodes(matrix)):
        raise CompileError("Skolemisation needs a prenex formula")

    universals: List[Tuple[str, str]] = []
    functions: List[FuncSymbol] = []
    counter = 0
    for kind, var, sort in prefix:
        if kind is Forall:
            universals.append((var, sort))
            continue
        name = f"sk{counter}"
        while name in taken:
            counter += 1
            name = f"sk{counter}"
        counter += 1
        taken.add(name)
        functions.append(FuncSymbol(name, tuple(s for _, s in universals), sort))
        witness = App(name, tuple(Var(v) for v, _ in universals))
        matrix = substitute_formula(matrix, {var: witness})

    logger.debug("skolemised %d existentials", len(functions))
    return with_prefix([(Forall, var, sort) for var, sort in universals], matrix), functions


def _iter_nodes(formula: Formula):
    yield formula
    if isinstance(formula, Not):
        yield from _iter_nodes(formula.body)
    elif isinstance(formula, (And, Or, Implies)):
        yield from _iter_nodes(formula.left)
        yield from _iter_nodes(formula.right)
    elif isinstance(formula, (Forall, Exists)):
        yield from _iter_nodes(formula.body)


def to_nnf(formula: Formula, positive: bool = True) -> Formula:
    """Negation normal form of a quantifier-free formula, implications removed"""
    if is_atom(formula):
        return formula if positive else Not(formula)
    if isinstance(formula, Not):
        return to_nnf(formula.body, not positive)
    if isinstance(formula, Implies):
        return to_nnf(Or(Not(formula.left), formula.right), positive)
    if isinstance(formula, (And, Or)):
        keep = isinstance(formula, And) == positive
        return (And if keep else Or)(
            to_nnf(formula.left, positive), to_nnf(formula.right, positive)
        )
    raise CompileError(f"Unexpected quantifier in a quantifier-free matrix: {formula}")


def to_cnf(formula: Formula, clause_cap: int = DEFAULT_CLAUSE_CAP) -> List[Clause]:
    """
    Clause list of a universal sentence, by distributing disjunction over conjunction.

    Repeated literals inside a clause are dropped; clauses stay in generation order.

    Raises
    ------
    CompileError
        When an existential quantifier is left

    BudgetError
        When an intermediate clause list exceeds the cap
    """
    prefix, matrix = split_prefix(formula)
    if any(kind is Exists for kind, _, _ in prefix):
        raise CompileError("CNF conversion needs a universal sentence")

    def clauses(node: Formula) -> List[Clause]:
        if is_atom(node):
            return [(Literal(node),)]
        if isinstance(node, Not):
            return [(Literal(node.body, positive=False),)]
        if isinstance(node, And):
            result = clauses(node.left) + clauses(node.right)
        else:
            left, right = clauses(node.left), clauses(node.right)
            if len(left) * len(right) > clause_cap:
                raise BudgetError(
                    f"CNF distribution would produce {len(left) * len(right)} clauses, "
                    f"over the cap of {clause_cap}"
                )
            result = [tuple(unique(a + b)) for a in left for b in right]
        if len(result) > clause_cap:
            raise BudgetError(f"CNF has {len(result)} clauses, over the cap of {clause_cap}")
        return result

    result = clauses(to_nnf(matrix))
    logger.debug("CNF with %d clauses", len(result))
    return result


@dataclass
class EqualityExpansion:
    """
    Attributes
    ----------
    clauses
        The input clauses with every equality replaced by its congruence relation

    axioms
        Reflexivity, symmetry, transitivity and congruence clauses

    relations
        Sort -> name of its congruence relation

    variables
        Extra universal variables the axioms range over, with their sorts
    """

    clauses: List[Clause]
    axioms: List[Clause]
    relations: Dict[str, str]
    variables: List[Tuple[str, str]]


def equality_relation_name(sort: str) -> str:
    return f"E_{sort}"


def _sorted_terms(clauses: List[Clause], signature: Signature, scope: Dict[str, str]):
    for clause in clauses:
        for literal in clause:
            atom = literal.atom
            for term in atom.args if isinstance(atom, Pred) else (atom.lhs, atom.rhs):
                for subterm in iter_subterms(term):
                    yield subterm, term_sort_in(subterm, signature, scope)


def expand_equality(
    clauses: List[Clause],
    signature: Signature,
    scope: Dict[str, str],
    taken: Optional[Set[str]] = None,
) -> EqualityExpansion:
    """
    Replaces t = t' by E_S(t, t') and adds the congruence axioms.

    Congruence relations are introduced for the sorts equality is used at, and for the result
    sort of every used function taking an argument of such a sort. Axioms range over fresh
    variables of each sort; scope gives the sorts of the clause variables.
    """
    taken = set(taken or ()) | set(signature.names()) | set(scope)
    used_functions: List[str] = []
    used_relations: List[str] = []
    equality_sorts: List[str] = []
    for clause in clauses:
        for literal in clause:
            atom = literal.atom
            if isinstance(atom, Equals):
                sort = term_sort_in(atom.lhs, signature, scope)
                if sort not in equality_sorts:
                    equality_sorts.append(sort)
            elif atom.name not in used_relations:
                used_relations.append(atom.name)
    for subterm, _ in _sorted_terms(clauses, signature, scope):
        if isinstance(subterm, App) and subterm.func not in used_functions:
            used_functions.append(subterm.func)

    if not equality_sorts:
        return EqualityExpansion(list(clauses), [], {}, [])

    changed = True
    while changed:
        changed = False
        for name in used_functions:
            func = signature.functions[name]
            if set(func.arg_sorts) & set(equality_sorts) and func.result_sort not in equality_sorts:
                equality_sorts.append(func.result_sort)
                changed = True
    equality_sorts = [sort for sort in signature.sorts if sort in equality_sorts]

    relations = {}
    for sort in equality_sorts:
        relations[sort] = fresh_name(equality_relation_name(sort), taken)
        taken.add(relations[sort])

    def replace(literal: Literal) -> Literal:
        atom = literal.atom
        if isinstance(atom, Equals):
            sort = term_sort_in(atom.lhs, signature, scope)
            return Literal(Pred(relations[sort], (atom.lhs, atom.rhs)), literal.positive)
        return literal

    rewritten = [tuple(replace(literal) for literal in clause) for clause in clauses]

    pools: Dict[str, List[Var]] = {}
    variables: List[Tuple[str, str]] = []

    def pool(sort: str, count: int) -> List[Var]:
        available = pools.setdefault(sort, [])
        while len(available) < count:
            name = fresh_name(f"{sort.lower()}{len(available) + 1}", taken)
            taken.add(name)
            available.append(Var(name))
            variables.append((name, sort))
        return available[:count]

    def eq(sort: str, lhs: Term, rhs: Term, positive: bool = True) -> Literal:
        return Literal(Pred(relations[sort], (lhs, rhs)), positive)

    axioms: List[Clause] = []
    for sort in equality_sorts:
        x, y, z = pool(sort, 3)
        axioms.append((eq(sort, x, x),))
        axioms.append((eq(sort, x, y, False), eq(sort, y, x)))
        axioms.append((eq(sort, x, y, False), eq(sort, y, z, False), eq(sort, x, z)))

    def congruence_args(arg_sorts: Tuple[str, ...]):
        """Two argument tuples that differ exactly at the positions of congruence sorts"""
        needed: Dict[str, int] = {}
        for sort in arg_sorts:
            needed[sort] = needed.get(sort, 0) + (2 if sort in relations else 1)
        drawn = {sort: iter(pool(sort, count)) for sort, count in needed.items()}
        left, right, premises = [], [], []
        for sort in arg_sorts:
            first = next(drawn[sort])
            second = next(drawn[sort]) if sort in relations else first
            left.append(first)
            right.append(second)
            if sort in relations:
                premises.append(eq(sort, first, second, False))
        return tuple(left), tuple(right), premises

    for name in used_functions:
        func = signature.functions[name]
        if not set(func.arg_sorts) & set(relations):
            continue
        left, right, premises = congruence_args(func.arg_sorts)
        axioms.append(tuple(premises) + (eq(func.result_sort, App(name, left), App(name, right)),))

    for name in used_relations:
        arg_sorts = signature.relations[name]
        if not set(arg_sorts) & set(relations):
            continue
        left, right, premises = congruence_args(arg_sorts)
        axioms.append(
            tuple(premises) + (Literal(Pred(name, left), False), Literal(Pred(name, right)))
        )

    logger.debug(
        "equality replaced at sorts %s with %d axiom clauses", equality_sorts, len(axioms)
    )
    return EqualityExpansion(rewritten, axioms, relations, variables)
