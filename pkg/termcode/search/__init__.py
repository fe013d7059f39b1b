from termcode.search.annealing import anneal_max
from termcode.search.exhaustive import all_maximisers, exhaustive_max
from termcode.search.guessing import GuessResult, guess_at_n, guess_at_sizes
from termcode.search.maximize import dispersion_max, maximize
from termcode.search.models import find_model
from termcode.search.SearchParams import SearchParams, SearchResult

__all__ = [
    "GuessResult",
    "SearchParams",
    "SearchResult",
    "all_maximisers",
    "anneal_max",
    "dispersion_max",
    "exhaustive_max",
    "find_model",
    "guess_at_n",
    "guess_at_sizes",
    "maximize",
]
