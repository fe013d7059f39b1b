from termcode.ir.System import (
    Constraint,
    DomainSizes,
    FuncSymbol,
    SortDecl,
    System,
    VarDecl,
)
from termcode.ir.terms import App, Term, Var, app, free_vars
from termcode.ir.validation import ValidationReport, term_sort, validate_system

__all__ = [
    "App",
    "Constraint",
    "DomainSizes",
    "FuncSymbol",
    "SortDecl",
    "System",
    "Term",
    "ValidationReport",
    "Var",
    "VarDecl",
    "app",
    "free_vars",
    "term_sort",
    "validate_system",
]
