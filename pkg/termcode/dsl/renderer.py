from itertools import groupby
from typing import List

from termcode.ir.System import Constraint, System
from termcode.ir.terms import Term, Var
from termcode.utilities.system import digest


def render_term(term: Term) -> str:
    if isinstance(term, Var):
        return term.name
    if not term.args:
        return term.func
    return f"{term.func}({', '.join(render_term(arg) for arg in term.args)})"


def render_constraint(constraint: Constraint) -> str:
    symbol = "=" if constraint.kind == "eq" else "!="
    return f"{render_term(constraint.lhs)} {symbol} {render_term(constraint.rhs)}"


def render(system: System) -> str:
    """
    Renders a system in canonical .tc form: sections in the order sort, fun, var, eq, neq, out,
    declaration order preserved within each section. Consecutive variables of one sort share a line.
    """
    lines: List[str] = [f"sort {sort.name}" for sort in system.sorts]

    for func in system.funcs:
        arguments = " ".join(func.arg_sorts)
        arguments = f" {arguments}" if arguments else ""
        lines.append(f"fun {func.name} :{arguments} -> {func.result_sort}")

    for sort, group in groupby(system.vars, key=lambda var: var.sort):
        lines.append(f"var {' '.join(var.name for var in group)} : {sort}")

    lines.extend(f"eq {render_constraint(eq)}" for eq in system.equations)
    lines.extend(f"neq {render_constraint(neq)}" for neq in system.disequalities)

    if system.outputs:
        lines.append("out " + " ".join(render_term(term) for term in system.outputs))

    return "\n".join(lines) + "\n"


def system_digest(system: System) -> str:
    """Digest of the canonical rendering, identifying a system across runs"""
    return digest(render(system))
