from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Tuple, Union

from termcode.utilities.general import unique


@dataclass(frozen=True)
class Var:
    """
    A variable leaf
    """

    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class App:
    """
    A function application. Constants are applications with no arguments.
    """

    func: str
    args: Tuple["Term", ...] = ()

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))

    @property
    def is_constant(self) -> bool:
        return not self.args

    def __str__(self):
        if not self.args:
            return self.func
        return f"{self.func}({','.join(str(arg) for arg in self.args)})"


Term = Union[Var, App]


def app(func: str, *args: Union[Term, str]) -> App:
    """Shorthand builder, strings become variables"""
    return App(func, tuple(Var(arg) if isinstance(arg, str) else arg for arg in args))


def iter_subterms(term: Term) -> Iterator[Term]:
    """Post-order traversal, arguments before the application"""
    if isinstance(term, App):
        for arg in term.args:
            yield from iter_subterms(arg)
    yield term


def free_vars(term: Term) -> List[str]:
    """
    Returns
    -------
    Variable names of the term in first-occurrence order, without duplicates
    """
    return unique(_iter_var_names(term))


def _iter_var_names(term: Term) -> Iterator[str]:
    if isinstance(term, Var):
        yield term.name
    else:
        for arg in term.args:
            yield from _iter_var_names(arg)


def function_names(term: Term) -> List[str]:
    return unique(
        subterm.func for subterm in iter_subterms(term) if isinstance(subterm, App)
    )


def depth(term: Term) -> int:
    if isinstance(term, Var) or not term.args:
        return 0
    return 1 + max(depth(arg) for arg in term.args)


def substitute(term: Term, mapping: Dict[str, Term]) -> Term:
    """Replaces variables by terms"""
    if isinstance(term, Var):
        return mapping.get(term.name, term)
    return App(term.func, tuple(substitute(arg, mapping) for arg in term.args))


def rename_functions(term: Term, rename: Callable[[App], str]) -> Term:
    if isinstance(term, Var):
        return term
    return App(
        rename(term), tuple(rename_functions(arg, rename) for arg in term.args)
    )
