# project module marker

from termcode.catalog import gen
from termcode.dsl import parse, parse_file, render
from termcode.entropy import shannon_bound, system_bound
from termcode.graph import DepGraph
from termcode.ir import DomainSizes, System
from termcode.normalization import diversify, normalize, normalize_and_diversify
from termcode.search import SearchParams, guess_at_n, maximize
from termcode.semantics import Interpretation, Witness, count_solutions
from termcode.version import __version__

__all__ = [
    "DepGraph",
    "DomainSizes",
    "Interpretation",
    "SearchParams",
    "System",
    "Witness",
    "__version__",
    "count_solutions",
    "diversify",
    "gen",
    "guess_at_n",
    "maximize",
    "normalize",
    "normalize_and_diversify",
    "parse",
    "parse_file",
    "render",
    "shannon_bound",
    "system_bound",
]
