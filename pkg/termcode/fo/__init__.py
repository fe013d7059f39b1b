from termcode.fo.compiler import CompileOutput, CompileTrace, compile_problem, compile_sentence
from termcode.fo.formulas import FOProblem, Signature
from termcode.fo.models import (
    compiled_has_model,
    compiled_model,
    find_structure,
    has_model,
    has_model_up_to,
)
from termcode.fo.parser import parse_fo, parse_fo_file, parse_formula
from termcode.fo.transforms import expand_equality, skolemize, to_cnf, to_prenex

__all__ = [
    "CompileOutput",
    "CompileTrace",
    "FOProblem",
    "Signature",
    "compile_problem",
    "compile_sentence",
    "compiled_has_model",
    "compiled_model",
    "expand_equality",
    "find_structure",
    "has_model",
    "has_model_up_to",
    "parse_fo",
    "parse_fo_file",
    "parse_formula",
    "skolemize",
    "to_cnf",
    "to_prenex",
]
