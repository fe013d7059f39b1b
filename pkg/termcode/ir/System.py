from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from termcode.constants import ConstraintKind
from termcode.exceptions import ParameterError
from termcode.ir.terms import App, Term, free_vars, iter_subterms


@dataclass(frozen=True)
class SortDecl:
    name: str


@dataclass(frozen=True)
class FuncSymbol:
    """
    A typed function symbol; a constant when arg_sorts is empty
    """

    name: str
    arg_sorts: Tuple[str, ...]
    result_sort: str

    def __post_init__(self):
        if not isinstance(self.arg_sorts, tuple):
            object.__setattr__(self, "arg_sorts", tuple(self.arg_sorts))

    @property
    def arity(self) -> int:
        return len(self.arg_sorts)


@dataclass(frozen=True)
class VarDecl:
    name: str
    sort: str


@dataclass(frozen=True)
class Constraint:
    """
    An equation (kind EQ, housed in Γ) or a disequality (kind NEQ, housed in Δ)
    """

    kind: ConstraintKind
    lhs: Term
    rhs: Term

    @classmethod
    def eq(cls, lhs: Term, rhs: Term) -> "Constraint":
        return cls(ConstraintKind.EQ, lhs, rhs)

    @classmethod
    def neq(cls, lhs: Term, rhs: Term) -> "Constraint":
        return cls(ConstraintKind.NEQ, lhs, rhs)

    def __str__(self):
        symbol = "=" if self.kind == ConstraintKind.EQ else "!="
        return f"{self.lhs} {symbol} {self.rhs}"


@dataclass(frozen=True)
class System:
    """
    A multi-sorted term coding system: signature, equations Γ, disequalities Δ and optional
    dispersion output terms.

    Declaration order is canonical: variable enumeration, solution tuples and table
    encodings all follow it.

    Attributes
    ----------
    sorts
        Declared sorts

    funcs
        Declared function symbols, constants included

    vars
        Declared variables

    equations
        Constraints of kind EQ

    disequalities
        Constraints of kind NEQ

    outputs
        Output terms, non-empty exactly for dispersion problems
    """

    sorts: Tuple[SortDecl, ...]
    funcs: Tuple[FuncSymbol, ...] = ()
    vars: Tuple[VarDecl, ...] = ()
    equations: Tuple[Constraint, ...] = ()
    disequalities: Tuple[Constraint, ...] = ()
    outputs: Tuple[Term, ...] = field(default=())

    def __post_init__(self):
        for name in ("sorts", "funcs", "vars", "equations", "disequalities", "outputs"):
            value = getattr(self, name)
            if not isinstance(value, tuple):
                object.__setattr__(self, name, tuple(value))

    @cached_property
    def sort_names(self) -> List[str]:
        return [sort.name for sort in self.sorts]

    @cached_property
    def var_names(self) -> List[str]:
        return [var.name for var in self.vars]

    @cached_property
    def func_names(self) -> List[str]:
        return [func.name for func in self.funcs]

    @cached_property
    def var_sorts(self) -> Dict[str, str]:
        return {var.name: var.sort for var in self.vars}

    @cached_property
    def func_table(self) -> Dict[str, FuncSymbol]:
        return {func.name: func for func in self.funcs}

    @property
    def is_dispersion(self) -> bool:
        return bool(self.outputs)

    @property
    def constraints(self) -> Tuple[Constraint, ...]:
        return self.equations + self.disequalities

    def func(self, name: str) -> FuncSymbol:
        try:
            return self.func_table[name]
        except KeyError:
            raise ParameterError(f"Unknown function symbol '{name}'")

    def names(self) -> set:
        """All identifiers in use, sorts included"""
        return set(self.sort_names) | set(self.var_names) | set(self.func_names)

    def iter_terms(self) -> Iterator[Term]:
        for constraint in self.constraints:
            yield constraint.lhs
            yield constraint.rhs
        yield from self.outputs

    def used_functions(self) -> List[str]:
        used = set()
        for term in self.iter_terms():
            used.update(
                subterm.func
                for subterm in iter_subterms(term)
                if isinstance(subterm, App)
            )
        return [name for name in self.func_names if name in used]

    def used_variables(self) -> List[str]:
        used = set()
        for term in self.iter_terms():
            used.update(free_vars(term))
        return [name for name in self.var_names if name in used]

    def evolve(self, **changes) -> "System":
        """A copy with some fields replaced"""
        return replace(self, **changes)


class DomainSizes(Mapping):
    """
    Mapping of sort name to a positive domain size, covering every sort of a system
    """

    def __init__(self, sizes: Mapping[str, int]):
        self._sizes = {sort: int(size) for sort, size in sizes.items()}
        for sort, size in self._sizes.items():
            if size < 1:
                raise ParameterError(f"Domain size for sort '{sort}' must be >= 1")

    @classmethod
    def for_system(
        cls,
        system: System,
        sizes: Optional[Mapping[str, int]] = None,
        *,
        uniform: Optional[int] = None,
    ) -> "DomainSizes":
        """
        Builds sizes for a system, either uniformly or from an explicit mapping.
        Extra sorts are rejected, missing sorts take the uniform size when given.
        """
        sizes = dict(sizes or {})
        unknown = set(sizes) - set(system.sort_names)
        if unknown:
            raise ParameterError(f"Sizes given for undeclared sorts {sorted(unknown)}")

        resolved = {}
        for sort in system.sort_names:
            if sort in sizes:
                resolved[sort] = sizes[sort]
            elif uniform is not None:
                resolved[sort] = uniform
            else:
                raise ParameterError(f"No domain size given for sort '{sort}'")

        return cls(resolved)

    def var_size(self, system: System, var: str) -> int:
        return self._sizes[system.var_sorts[var]]

    def __getitem__(self, sort: str) -> int:
        return self._sizes[sort]

    def __iter__(self):
        return iter(self._sizes)

    def __len__(self):
        return len(self._sizes)

    def __repr__(self):
        return f"DomainSizes({self._sizes})"

    def __eq__(self, other):
        return isinstance(other, Mapping) and dict(self) == dict(other)

    def __hash__(self):
        return hash(tuple(sorted(self._sizes.items())))
