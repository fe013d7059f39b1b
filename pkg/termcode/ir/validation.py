from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional

from termcode.constants import ConstraintKind
from termcode.exceptions import ValidationError
from termcode.ir.System import Constraint, System
from termcode.ir.terms import App, Term, Var


@dataclass(frozen=True)
class ValidationIssue:
    """
    Attributes
    ----------
    code
        Machine readable category, e.g. arity-mismatch

    message
        Human readable description
    """

    code: str
    message: str

    def __str__(self):
        return f"{self.code}: {self.message}"


@dataclass
class ValidationReport:
    issues: List[ValidationIssue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    @property
    def codes(self) -> List[str]:
        return [issue.code for issue in self.issues]

    def add(self, code: str, message: str):
        self.issues.append(ValidationIssue(code, message))

    def raise_for_issues(self):
        if not self.ok:
            raise ValidationError(self)


def term_sort(term: Term, system: System) -> str:
    """
    Returns
    -------
    The sort of a well-typed term: a variable's declared sort, or an application's result sort
    """
    report = ValidationReport()
    sort = _check_term(term, system, report)
    if sort is None or not report.ok:
        if report.ok:
            report.add("untyped-term", f"term {term} has no sort")
        raise ValidationError(report)

    return sort


def _check_term(term: Term, system: System, report: ValidationReport) -> Optional[str]:
    """Type-checks a term, recording issues and returning its sort when determinable"""
    if isinstance(term, Var):
        sort = system.var_sorts.get(term.name)
        if sort is None:
            report.add("unknown-variable", f"variable '{term.name}' is not declared")
        return sort

    symbol = system.func_table.get(term.func)
    argument_sorts = [_check_term(arg, system, report) for arg in term.args]
    if symbol is None:
        report.add("unknown-symbol", f"function symbol '{term.func}' is not declared")
        return None

    if len(term.args) != symbol.arity:
        report.add(
            "arity-mismatch",
            f"'{term.func}' takes {symbol.arity} argument(s) but {term} passes {len(term.args)}",
        )
        return symbol.result_sort

    for position, (expected, actual) in enumerate(
        zip(symbol.arg_sorts, argument_sorts), start=1
    ):
        if actual is not None and actual != expected:
            report.add(
                "sort-mismatch",
                f"argument {position} of {term} has sort {actual}, expected {expected}",
            )

    return symbol.result_sort


def _check_constraint(constraint: Constraint, system: System, report: ValidationReport):
    lhs_sort = _check_term(constraint.lhs, system, report)
    rhs_sort = _check_term(constraint.rhs, system, report)
    if lhs_sort is not None and rhs_sort is not None and lhs_sort != rhs_sort:
        code = (
            "neq-sort-mismatch"
            if constraint.kind == ConstraintKind.NEQ
            else "sort-mismatch"
        )
        report.add(
            code, f"sides of '{constraint}' have sorts {lhs_sort} and {rhs_sort}"
        )

    if constraint.kind == ConstraintKind.NEQ and constraint.lhs == constraint.rhs:
        report.add(
            "trivial-disequality",
            f"'{constraint}' can never hold, the system is inconsistent",
        )


def _check_declarations(system: System, report: ValidationReport):
    if not system.sorts:
        report.add("no-sorts", "a system needs at least one sort")

    for name, count in Counter(system.sort_names).items():
        if count > 1:
            report.add("duplicate-name", f"sort '{name}' is declared {count} times")

    symbol_names = Counter(system.func_names + system.var_names)
    for name, count in symbol_names.items():
        if count > 1:
            report.add(
                "duplicate-name",
                f"'{name}' is declared {count} times among variables and function symbols",
            )

    declared_sorts = set(system.sort_names)
    for func in system.funcs:
        for sort in func.arg_sorts + (func.result_sort,):
            if sort not in declared_sorts:
                report.add(
                    "unknown-sort", f"function symbol '{func.name}' uses unknown sort {sort}"
                )
    for var in system.vars:
        if var.sort not in declared_sorts:
            report.add(
                "unknown-sort", f"variable '{var.name}' has unknown sort {var.sort}"
            )


def validate_system(system: System) -> ValidationReport:
    """
    Type-checks a system. Never raises; the report lists every issue found.

    Detects unknown symbols, variables and sorts, arity and sort mismatches, duplicate names,
    disequalities between different sorts and syntactically unsatisfiable disequalities t != t.
    """
    report = ValidationReport()
    _check_declarations(system, report)

    for constraint in system.constraints:
        if not isinstance(constraint.lhs, (Var, App)) or not isinstance(
            constraint.rhs, (Var, App)
        ):
            report.add("untyped-term", f"'{constraint}' contains a non-term")
            continue
        _check_constraint(constraint, system, report)

    for term in system.outputs:
        _check_term(term, system, report)

    return report
