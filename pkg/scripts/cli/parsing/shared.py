import argparse

from termcode.constants import DEFAULT_THREADS, Objective, SearchMode
from termcode.search.SearchParams import SearchParams

DEFAULT_SEARCH_PARAMS = SearchParams()


def get_output_parser():
    output_parser = argparse.ArgumentParser(add_help=False)

    output_parser.add_argument(
        "--json",
        dest="json",
        action="store_true",
        default=False,
        help="Print results, and errors on stderr, as JSON documents instead of text",
    )
    output_parser.add_argument(
        "--record",
        dest="record",
        help="Write a run record (command, input digest, parameters, result, wall time) to this JSON file",
    )

    return output_parser


def get_input_parser():
    input_parser = argparse.ArgumentParser(add_help=False)

    input_parser.add_argument(
        "file",
        help="A term coding system in .tc format",
    )

    return input_parser


def get_search_parser():
    search_parser = argparse.ArgumentParser(add_help=False)

    search_parser.add_argument(
        "-m",
        "--mode",
        dest="mode",
        default=DEFAULT_SEARCH_PARAMS.mode.value,
        choices=[mode.value for mode in SearchMode],
        help="Enumerate every interpretation, or anneal from random tables",
    )
    search_parser.add_argument(
        "--seed",
        dest="seed",
        type=int,
        default=DEFAULT_SEARCH_PARAMS.seed,
        help="Base seed of the annealing restarts",
    )
    search_parser.add_argument(
        "--steps",
        dest="steps",
        type=int,
        default=DEFAULT_SEARCH_PARAMS.steps,
        help="Single-entry mutations per annealing restart",
    )
    search_parser.add_argument(
        "--restarts",
        dest="restarts",
        type=int,
        default=DEFAULT_SEARCH_PARAMS.restarts,
        help="Independent annealing runs; the best one is kept",
    )
    search_parser.add_argument(
        "--time-budget",
        dest="time_budget",
        type=float,
        help="Wall-clock seconds per annealing restart",
    )
    search_parser.add_argument(
        "-t",
        "--threads",
        dest="threads",
        type=int,
        default=DEFAULT_THREADS,
        help="Worker processes, all available cores by default. Results do not depend on this number",
    )
    search_parser.add_argument(
        "--fix",
        dest="fix",
        action="append",
        default=[],
        help="""Pin a table before searching, as SYMBOL=v1,v2,... in row-major order.
         May be passed several times (e.g.) --fix c=1 to pin the constant c""",
    )
    search_parser.add_argument(
        "-p",
        "--progress",
        dest="show_progress",
        action="store_true",
        default=False,
        help="Show progress bars on stderr",
    )

    return search_parser


def get_sizes_parser(required: bool = False):
    sizes_parser = argparse.ArgumentParser(add_help=False)

    sizes_parser.add_argument(
        "-s",
        "--sizes",
        dest="sizes",
        required=required,
        help="Domain sizes, either n for every sort or S=n[,S2=m] per sort",
    )

    return sizes_parser


def get_objective_parser():
    objective_parser = argparse.ArgumentParser(add_help=False)

    objective_parser.add_argument(
        "--objective",
        dest="objective",
        choices=[objective.value for objective in Objective],
        help="What to maximise. Defaults to the dispersion image for systems with outputs, solutions otherwise",
    )
    objective_parser.add_argument(
        "--coords",
        dest="coords",
        nargs="+",
        default=[],
        help="Variables to project solutions onto, for --objective projection",
    )

    return objective_parser
