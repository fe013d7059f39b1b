import argparse
import re
import sys

import numpy as np

from scripts.cli.parsing.commands import (
    add_bound_parser,
    add_compile_parser,
    add_decide_parser,
    add_diversify_parser,
    add_exponent_parser,
    add_gen_parser,
    add_graph_parser,
    add_normalize_parser,
    add_parse_parser,
    add_reduce_parser,
    add_reproduce_parser,
    add_search_parser,
    add_verify_parser,
)
from scripts.cli.parsing.shared import (
    get_input_parser,
    get_objective_parser,
    get_output_parser,
    get_search_parser,
    get_sizes_parser,
)
from termcode.exceptions import ParameterError
from termcode.utilities.conversion import parse_sizes

USAGE_EXIT_CODE = 1


def prepare_arguments(args):
    """
    Formats and validates program inputs
    """
    sizes = get_attribute(args, "sizes")
    if sizes is not None:
        args.uniform, args.sizes = parse_sizes(sizes)
    else:
        args.uniform = None

    if get_attribute(args, "fix") is not None:
        args.fix = dict(fixed_table(item) for item in args.fix)

    if get_attribute(args, "objective") != "projection" and get_attribute(args, "coords"):
        raise ParameterError("--coords only applies to --objective projection")

    return args


def fixed_table(arg):
    """
    Parses SYMBOL=v1,v2,... into a symbol name and a flat table
    """
    match = re.fullmatch(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(\d+(\s*,\s*\d+)*)\s*", arg)
    if match is None:
        raise ParameterError(
            f"Improper pinned table '{arg}'. Tables must be of the form SYMBOL=v1,v2,..."
        )
    values = [int(value) for value in match.group(2).split(",")]

    return match.group(1), np.array(values, dtype=np.int64)


def get_attribute(*args, **kwargs):
    return getattr(*args, None, **kwargs)


class HelpParser(argparse.ArgumentParser):
    """
    Custom Parser which prints help on error and exits with the usage code
    """

    def error(self, message):
        sys.stderr.write("error: %s\n" % message)
        self.print_help(sys.stderr)
        sys.exit(USAGE_EXIT_CODE)


def parse_arguments(args):

    parser = get_help_parser()
    command_parsers = parser.add_subparsers()

    # Shared parameters
    output_parser = get_output_parser()
    input_parser = get_input_parser()
    search_parser = get_search_parser()
    sizes_parser = get_sizes_parser()
    required_sizes_parser = get_sizes_parser(required=True)
    objective_parser = get_objective_parser()
    on_file = [input_parser, output_parser]

    # Commands
    add_parse_parser(command_parsers, on_file)
    add_normalize_parser(command_parsers, on_file)
    add_diversify_parser(command_parsers, on_file)
    add_graph_parser(command_parsers, on_file)
    add_search_parser(
        command_parsers, on_file + [required_sizes_parser, search_parser, objective_parser]
    )
    add_bound_parser(command_parsers, on_file + [sizes_parser])
    add_exponent_parser(command_parsers, on_file + [search_parser])
    add_decide_parser(command_parsers, on_file)
    add_reduce_parser(command_parsers, on_file)
    add_compile_parser(command_parsers, [output_parser])
    add_gen_parser(command_parsers, [output_parser])
    add_verify_parser(command_parsers, on_file)
    add_reproduce_parser(command_parsers, [output_parser, search_parser])

    # Exit if no arguments are passed in
    if len(args) == 0:
        parser.print_help(sys.stderr)
        sys.exit(USAGE_EXIT_CODE)

    args = parser.parse_args(args)
    if get_attribute(args, "func") is None:
        parser.error("a command is required")

    return args


def get_help_parser():
    help_parser = HelpParser(
        prog="tc", formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    help_parser.add_argument(
        "-db",
        "--debug",
        dest="debug",
        action="store_true",
        default=False,
        help="Pass in this argument to print useful debug info",
    )

    return help_parser
