import argparse

from scripts.cli import commands
from scripts.cli.reproduce import TABLES, reproduce
from termcode.catalog import example_names


def _add_parser(command_parsers, name, parents, help, func):
    parser = command_parsers.add_parser(
        name,
        parents=parents,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        help=help,
    )
    parser.set_defaults(func=func, command=name)

    return parser


def _add_output_file(parser, required: bool = False, help="Output .tc file; prints to stdout when omitted"):
    parser.add_argument("-o", "--output", dest="output", required=required, help=help)


def add_parse_parser(command_parsers, parents):
    return _add_parser(
        command_parsers,
        "parse",
        parents,
        "Validate a system and print its canonical form",
        commands.parse_system,
    )


def add_normalize_parser(command_parsers, parents):
    normalize_parser = _add_parser(
        command_parsers,
        "normalize",
        parents,
        "Rewrite a system into flat equations x = f(y1,...,yk) over fresh auxiliary variables",
        commands.normalize_system,
    )
    _add_output_file(normalize_parser)

    return normalize_parser


def add_diversify_parser(command_parsers, parents):
    diversify_parser = _add_parser(
        command_parsers,
        "diversify",
        parents,
        "Normalise a system and give every flat equation its own function symbol",
        commands.diversify_system,
    )
    _add_output_file(diversify_parser)

    return diversify_parser


def add_graph_parser(command_parsers, parents):
    graph_parser = _add_parser(
        command_parsers,
        "graph",
        parents,
        "Export the dependency graph of the diversified system in DOT format",
        commands.export_graph,
    )
    graph_parser.add_argument(
        "--dot", dest="dot", required=True, help="Output .dot file"
    )

    return graph_parser


def add_search_parser(command_parsers, parents):
    search_parser = _add_parser(
        command_parsers,
        "search",
        parents,
        "Search for the interpretation maximising the solution count or dispersion image",
        commands.search_system,
    )
    search_parser.add_argument(
        "-w",
        "--witness",
        dest="witness",
        help="Write the best interpretation to this JSON file, in a form tc verify accepts",
    )

    return search_parser


def add_bound_parser(command_parsers, parents):
    return _add_parser(
        command_parsers,
        "bound",
        parents,
        "Upper bound on the guessing value from the Shannon entropy program",
        commands.bound_system,
    )


def add_exponent_parser(command_parsers, parents):
    exponent_parser = _add_parser(
        command_parsers,
        "exponent",
        parents,
        "Integer dispersion exponent D by max-flow on the term DAG",
        commands.exponent_system,
    )
    exponent_parser.add_argument(
        "--oracle-sizes",
        dest="oracle_sizes",
        type=int,
        nargs="+",
        default=[],
        help="Uniform sizes at which to confirm by search that the dispersion stays within n^D",
    )

    return exponent_parser


def add_decide_parser(command_parsers, parents):
    decide_parser = _add_parser(
        command_parsers,
        "decide",
        parents,
        "Decide whether the maximal dispersion eventually exceeds n^d, that is whether D >= d + 1",
        commands.decide_system,
    )
    decide_parser.add_argument("-d", "--d", dest="d", type=int, required=True, help="The exponent d")

    return decide_parser


def add_reduce_parser(command_parsers, parents):
    reduce_parser = _add_parser(
        command_parsers,
        "reduce",
        parents,
        "Reduce a dispersion system to a term coding system with decoder symbols",
        commands.reduce_system,
    )
    _add_output_file(reduce_parser)

    return reduce_parser


def add_compile_parser(command_parsers, parents):
    compile_parser = _add_parser(
        command_parsers,
        "compile-fo",
        parents,
        "Compile a first-order sentence in .fo format into a term coding system",
        commands.compile_fo,
    )
    compile_parser.add_argument("file", help="A first-order problem in .fo format")
    _add_output_file(compile_parser)
    compile_parser.add_argument(
        "--trace",
        dest="trace",
        help="Write the prenex form, Skolem form, clauses and clause equations to this JSON file",
    )
    compile_parser.add_argument(
        "--check-n",
        dest="check_n",
        type=int,
        help="Search the compiled system for a model of size n with the standard Boolean tables",
    )
    compile_parser.add_argument(
        "--clause-cap",
        dest="clause_cap",
        type=int,
        help="Maximum number of CNF clauses",
    )

    return compile_parser


def add_gen_parser(command_parsers, parents):
    gen_parser = _add_parser(
        command_parsers,
        "gen",
        parents,
        "Generate a named example system",
        commands.generate_example,
    )
    gen_parser.add_argument(
        "name",
        choices=example_names(),
        help="The example to generate",
    )
    gen_parser.add_argument(
        "--t", dest="t", type=int, help="Block parameter of steiner-t, t >= 2"
    )
    _add_output_file(gen_parser)

    return gen_parser


def add_verify_parser(command_parsers, parents):
    verify_parser = _add_parser(
        command_parsers,
        "verify",
        parents,
        "Recount a witness from scratch and check it reaches the claimed value",
        commands.verify_witness_file,
    )
    verify_parser.add_argument(
        "-w", "--witness", dest="witness", required=True, help="Witness JSON file"
    )
    verify_parser.add_argument(
        "-c",
        "--claim",
        dest="claim",
        type=int,
        help="Claimed solution count or image size. Defaults to the count stored in the witness",
    )

    return verify_parser


def add_reproduce_parser(command_parsers, parents):
    reproduce_parser = _add_parser(
        command_parsers,
        "reproduce",
        parents,
        "Recompute a table of maxima as CSV",
        reproduce,
    )
    reproduce_parser.add_argument("table", choices=list(TABLES), help="The table to recompute")
    reproduce_parser.add_argument(
        "--max-n",
        dest="max_n",
        type=int,
        help="Largest alphabet size. Defaults depend on the table",
    )

    return reproduce_parser
