"""
Flattening of term systems into normal form, and diversification of function symbols.

A normalised equation reads f(x_1, ..., x_k) = x_j with variables only; a normalised
disequality reads x_i != x_j. Solutions of a system and of its normal form are in bijection:
auxiliary variables are determined by their defining equations and merged variables are equal
in every solution.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from termcode.exceptions import ParameterError
from termcode.ir.System import Constraint, FuncSymbol, System, VarDecl
from termcode.ir.terms import App, Term, Var, iter_subterms, substitute
from termcode.utilities.general import fresh_name, unique

logger = logging.getLogger(__name__)

AUX_PREFIX = "_a"

FlatKey = Tuple[str, Tuple[str, ...]]


@dataclass
class VarMap:
    """
    Attributes
    ----------
    aux
        Fresh auxiliary variable -> the flat application defining it

    merged
        Variable removed by a trivial equality -> the variable that survived
    """

    aux: Dict[str, App] = field(default_factory=dict)
    merged: Dict[str, str] = field(default_factory=dict)

    @property
    def is_empty(self) -> bool:
        return not self.aux and not self.merged

    def representative(self, var: str) -> str:
        return self.merged.get(var, var)


@dataclass
class SymbolMap:
    """
    Attributes
    ----------
    symbols
        Diversified symbol -> (original symbol, 1-based equation index)

    merged
        Variables merged while deduplicating identical left-hand sides
    """

    symbols: Dict[str, Tuple[str, int]] = field(default_factory=dict)
    merged: Dict[str, str] = field(default_factory=dict)

    def original(self, symbol: str) -> str:
        return self.symbols[symbol][0]

    def representative(self, var: str) -> str:
        return self.merged.get(var, var)


class _UnionFind:
    """
    Union-find over variable names where the earlier-declared variable always survives
    """

    def __init__(self, order: Dict[str, int]):
        self.order = order
        self.parent: Dict[str, str] = {}

    def find(self, name: str) -> str:
        root = name
        while self.parent.get(root, root) != root:
            root = self.parent[root]
        while name != root:
            self.parent[name], name = root, self.parent.get(name, name)
        return root

    def union(self, a: str, b: str) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        keep, drop = (a, b) if self.order[a] <= self.order[b] else (b, a)
        self.parent[drop] = keep
        return True


class _Flattener:
    def __init__(self, system: System):
        self.system = system
        self.order = {name: index for index, name in enumerate(system.var_names)}
        self.sorts = dict(system.var_sorts)
        self.taken = system.names()
        self.classes = _UnionFind(self.order)
        self.memo: Dict[FlatKey, str] = {}
        self.definitions: List[Tuple[str, Tuple[str, ...], str]] = []
        self.aux: List[str] = []
        self._aux_counter = 0

    def new_aux(self, sort: str) -> str:
        while True:
            self._aux_counter += 1
            name = f"{AUX_PREFIX}{self._aux_counter}"
            if name not in self.taken:
                break
        self.taken.add(name)
        self.order[name] = len(self.order)
        self.sorts[name] = sort
        self.aux.append(name)
        return name

    def key(self, func: str, args: Tuple[str, ...]) -> FlatKey:
        return func, tuple(self.classes.find(arg) for arg in args)

    def name(self, term: Term) -> str:
        """Returns the variable standing for a term, creating auxiliary variables for subterms"""
        if isinstance(term, Var):
            return self.classes.find(term.name)

        args = tuple(self.name(arg) for arg in term.args)
        key = self.key(term.func, args)
        if key in self.memo:
            return self.classes.find(self.memo[key])

        aux = self.new_aux(self.system.func(term.func).result_sort)
        self.memo[key] = aux
        self.definitions.append((term.func, args, aux))
        return aux

    def define(self, application: App, var: str):
        """Registers application = var"""
        args = tuple(self.name(arg) for arg in application.args)
        key = self.key(application.func, args)
        if key in self.memo:
            self.merge(self.memo[key], var)
        else:
            self.memo[key] = var
            self.definitions.append((application.func, args, var))

    def merge(self, a: str, b: str):
        if self.classes.union(a, b):
            self.close()

    def close(self):
        """Congruence closure: equal left-hand sides force equal right-hand sides"""
        changed = True
        while changed:
            changed = False
            memo: Dict[FlatKey, str] = {}
            for func, args, var in self.definitions:
                key = self.key(func, args)
                if key in memo and self.classes.find(memo[key]) != self.classes.find(var):
                    self.classes.union(memo[key], var)
                    changed = True
                memo.setdefault(key, var)
            self.memo = memo

    def add_equation(self, lhs: Term, rhs: Term):
        if isinstance(lhs, Var) and isinstance(rhs, Var):
            self.merge(lhs.name, rhs.name)
        elif isinstance(lhs, App) and isinstance(rhs, Var):
            self.define(lhs, self.classes.find(rhs.name))
        elif isinstance(lhs, Var) and isinstance(rhs, App):
            self.define(rhs, self.classes.find(lhs.name))
        else:
            self.merge(self.name(lhs), self.name(rhs))

    def build(self) -> Tuple[System, VarMap]:
        find = self.classes.find

        for equation in self.system.equations:
            self.add_equation(equation.lhs, equation.rhs)
        disequalities = [
            (self.name(neq.lhs), self.name(neq.rhs)) for neq in self.system.disequalities
        ]
        self.close()

        originals = [name for name in self.system.var_names if find(name) == name]
        surviving_aux = [name for name in self.aux if find(name) == name]
        renames = self._renumber(surviving_aux, set(self.system.names()))

        def final(name: str) -> str:
            root = find(name)
            return renames.get(root, root)

        equations = []
        var_map = VarMap()
        emitted = set()
        for func, args, var in self.definitions:
            key = (func, tuple(final(arg) for arg in args))
            if key in emitted:
                continue
            emitted.add(key)
            application = App(func, tuple(Var(arg) for arg in key[1]))
            equations.append(Constraint.eq(application, Var(final(var))))
            if final(var) in renames.values() and final(var) not in var_map.aux:
                var_map.aux[final(var)] = application

        for name in self.system.var_names:
            if find(name) != name:
                var_map.merged[name] = final(name)

        variables = [VarDecl(name, self.sorts[name]) for name in originals] + [
            VarDecl(renames[name], self.sorts[name]) for name in surviving_aux
        ]
        outputs = tuple(
            substitute(term, {name: Var(final(name)) for name in self.system.var_names})
            for term in self.system.outputs
        )
        final_disequalities = unique((final(l), final(r)) for l, r in disequalities)
        for lhs, rhs in final_disequalities:
            if lhs == rhs:
                logger.warning(
                    "merging variables turned a disequality into %s != %s, the system has no solutions",
                    lhs,
                    rhs,
                )

        normalised = self.system.evolve(
            vars=tuple(variables),
            equations=tuple(equations),
            disequalities=tuple(
                Constraint.neq(Var(lhs), Var(rhs)) for lhs, rhs in final_disequalities
            ),
            outputs=outputs,
        )
        logger.debug(
            "normalised %d equations into %d flat equations with %d auxiliary variables",
            len(self.system.equations),
            len(equations),
            len(surviving_aux),
        )

        return normalised, var_map

    def _renumber(self, surviving_aux: List[str], reserved: set) -> Dict[str, str]:
        """Renames surviving auxiliaries to consecutive _a1, _a2, ... in creation order"""
        renames = {}
        counter = 0
        for name in surviving_aux:
            while True:
                counter += 1
                candidate = f"{AUX_PREFIX}{counter}"
                if candidate not in reserved:
                    break
            renames[name] = candidate

        return renames


def normalize(system: System) -> Tuple[System, VarMap]:
    """
    Flattens a system.

    Every equation becomes f(x_i1, ..., x_ik) = x_j (or c = x_j), every disequality becomes
    x_i != x_j. Identical compound subterms anywhere in the system share one auxiliary
    variable, and trivial equalities x = y merge the later-declared variable into the
    earlier-declared one.

    A disequality whose sides end up merged is kept as x != x. The system then has no
    solutions under any interpretation, and parsing its rendering needs validate=False because
    the validator rejects trivial disequalities in input files.

    Parameters
    ----------
    system
        A valid system

    Returns
    -------
    The normalised system, and the map recording auxiliary definitions and merges
    """
    return _Flattener(system).build()


def is_flat_equation(constraint: Constraint) -> bool:
    return (
        isinstance(constraint.lhs, App)
        and all(isinstance(arg, Var) for arg in constraint.lhs.args)
        and isinstance(constraint.rhs, Var)
    )


def is_flat(system: System) -> bool:
    """True iff all equations are flat and all disequalities atomic"""
    return all(is_flat_equation(eq) for eq in system.equations) and all(
        isinstance(neq.lhs, Var) and isinstance(neq.rhs, Var)
        for neq in system.disequalities
    )


def _diversified_name(func: str, index: int, taken: set) -> str:
    candidate = f"{func}_{index}" if func[-1].isdigit() else f"{func}{index}"
    return fresh_name(candidate, taken)


def diversify(system: System) -> Tuple[System, SymbolMap]:
    """
    Gives every flat equation its own fresh function symbol.

    Equations with identical left-hand sides are deduplicated first by merging their
    right-hand variables; disequalities are carried over unchanged.

    Returns
    -------
    The diversified system, and the map from new symbols to (original symbol, equation index)
    """
    if not is_flat(system):
        raise ParameterError("diversify expects a flat system, normalize it first")

    classes = _UnionFind({name: index for index, name in enumerate(system.var_names)})
    changed = True
    while changed:
        changed = False
        seen: Dict[FlatKey, str] = {}
        for equation in system.equations:
            key = (
                equation.lhs.func,
                tuple(classes.find(arg.name) for arg in equation.lhs.args),
            )
            rhs = equation.rhs.name
            if key in seen and classes.find(seen[key]) != classes.find(rhs):
                classes.union(seen[key], rhs)
                changed = True
            seen.setdefault(key, rhs)

    find = classes.find
    rename = {name: Var(find(name)) for name in system.var_names}
    flat: List[Tuple[FlatKey, str]] = []
    keys = set()
    for equation in system.equations:
        key = (equation.lhs.func, tuple(find(arg.name) for arg in equation.lhs.args))
        if key not in keys:
            keys.add(key)
            flat.append((key, find(equation.rhs.name)))

    outputs = tuple(substitute(term, rename) for term in system.outputs)
    output_symbols = {
        subterm.func
        for term in outputs
        for subterm in iter_subterms(term)
        if isinstance(subterm, App)
    }
    taken = system.names()
    symbol_map = SymbolMap(
        merged={name: find(name) for name in system.var_names if find(name) != name}
    )

    funcs: List[FuncSymbol] = [
        func for func in system.funcs if func.name in output_symbols
    ]
    equations = []
    for index, ((func, args), rhs) in enumerate(flat, start=1):
        original = system.func(func)
        name = _diversified_name(func, index, taken)
        taken.add(name)
        symbol_map.symbols[name] = (func, index)
        funcs.append(FuncSymbol(name, original.arg_sorts, original.result_sort))
        equations.append(
            Constraint.eq(App(name, tuple(Var(arg) for arg in args)), Var(rhs))
        )

    disequalities = unique(
        Constraint.neq(Var(find(neq.lhs.name)), Var(find(neq.rhs.name)))
        for neq in system.disequalities
    )
    diversified = system.evolve(
        funcs=tuple(funcs),
        vars=tuple(var for var in system.vars if find(var.name) == var.name),
        equations=tuple(equations),
        disequalities=tuple(disequalities),
        outputs=outputs,
    )

    return diversified, symbol_map


def normalize_and_diversify(system: System) -> Tuple[System, VarMap, SymbolMap]:
    normalised, var_map = normalize(system)
    diversified, symbol_map = diversify(normalised)
    return diversified, var_map, symbol_map

