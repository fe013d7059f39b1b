import logging

from scripts.cli.utilities import message, report, write_or_print
from termcode.catalog import gen, source
from termcode.constants import DEFAULT_CLAUSE_CAP, Objective
from termcode.dispersion import decide_threshold, integer_exponent, reduce_to_termcoding
from termcode.dsl import parse_file, render
from termcode.entropy import system_bound
from termcode.exceptions import ParameterError
from termcode.fo import compile_problem, compiled_model, parse_fo_file
from termcode.graph import DepGraph
from termcode.ir import DomainSizes, System
from termcode.normalization import diversify, normalize
from termcode.search import SearchParams, maximize
from termcode.semantics import Witness
from termcode.utilities.conversion import fraction_to_text
from termcode.utilities.system import write_text

logger = logging.getLogger(__name__)


def search_params(args) -> SearchParams:
    return SearchParams.build(
        mode=args.mode,
        seed=args.seed,
        restarts=args.restarts,
        steps=args.steps,
        time_budget=args.time_budget,
        threads=args.threads,
        show_progress=args.show_progress,
    )


def load_system(args) -> System:
    return parse_file(args.file)


def domain_sizes(args, system: System) -> DomainSizes:
    return DomainSizes.for_system(system, args.sizes, uniform=args.uniform)


def parse_system(args):
    system = load_system(args)
    write_or_print(args, render(system))


def normalize_system(args):
    normalized, var_map = normalize(load_system(args))
    if not var_map.is_empty:
        logger.debug("merged variables: %s", var_map)
    write_or_print(args, render(normalized), args.output)


def diversify_system(args):
    normalized, _ = normalize(load_system(args))
    diversified, _ = diversify(normalized)
    write_or_print(args, render(diversified), args.output)


def export_graph(args):
    normalized, _ = normalize(load_system(args))
    diversified, _ = diversify(normalized)
    graph = DepGraph.build(diversified)
    write_text(args.dot, graph.to_dot())
    report(
        args,
        f"Wrote {args.dot}: {len(graph.vertices)} vertices, {len(graph.edges)} edges",
        dot=args.dot,
        vertices=len(graph.vertices),
        edges=len(graph.edges),
    )


def search_system(args):
    system = load_system(args)
    sizes = domain_sizes(args, system)
    objective = Objective(args.objective) if args.objective else (
        Objective.DISPERSION if system.outputs else Objective.SOLUTIONS
    )
    if objective == Objective.PROJECTION and not args.coords:
        raise ParameterError("--objective projection needs --coords")

    result = maximize(
        system,
        sizes,
        search_params(args),
        objective,
        coordinates=args.coords or None,
        fixed=args.fix,
    )

    data = {
        "count": result.best_count,
        "exhausted": result.exhausted,
        "explored": result.explored,
        "objective": objective.value,
        "sizes": dict(sizes),
    }
    if args.witness:
        if objective == Objective.PROJECTION:
            raise ParameterError("Witness files record solution counts and dispersion images only")
        Witness.for_system(system, result.witness, result.best_count).save(args.witness)
        data["witness"] = args.witness

    status = "maximum" if result.exhausted else "best found"
    report(args, f"{objective.value}: {result.best_count} ({status})", **data)


def bound_system(args):
    system = load_system(args)
    sizes = args.sizes or None
    uniform = args.uniform
    if sizes is None and uniform is None:
        # The uniform bound does not depend on n
        uniform = 2
    result = system_bound(system, sizes, uniform=uniform)
    bound = fraction_to_text(result.normalised_bound)
    report(
        args,
        f"{bound} ({float(result.normalised_bound):.6f})",
        bound=bound,
        decimal=float(result.normalised_bound),
        max_joint=fraction_to_text(result.max_joint),
        base=result.base,
        certificate=result.certificate_json(),
    )


def exponent_system(args):
    system = load_system(args)
    params = search_params(args) if args.oracle_sizes else None
    result = integer_exponent(system, args.oracle_sizes, params, args.fix or None)
    text = f"D = {result.D}\ncut: {', '.join(result.cut)}"
    for n, best, exact in result.growth:
        text += f"\nn = {n}: dispersion {best}{'' if exact else ' (best found)'} <= {n ** result.D}"
    report(
        args,
        text,
        D=result.D,
        cut=result.cut,
        oracle_checked=result.oracle_checked,
        growth=[list(row) for row in result.growth],
    )


def decide_system(args):
    system = load_system(args)
    decision = decide_threshold(system, args.d)
    exponent = integer_exponent(system).D
    report(
        args,
        f"{'true' if decision else 'false'} (D={exponent})",
        decision=decision,
        d=args.d,
        D=exponent,
    )


def reduce_system(args):
    reduction = reduce_to_termcoding(load_system(args))
    logger.debug("projection onto %s", reduction.projection)
    write_or_print(args, render(reduction.system), args.output)


def compile_fo(args):
    problem = parse_fo_file(args.file)
    output = compile_problem(problem, args.clause_cap or DEFAULT_CLAUSE_CAP)
    if args.trace:
        output.trace.save(args.trace)

    model = None
    if args.check_n is not None:
        model = compiled_model(output, args.check_n) is not None

    text = render(output.system)
    if not args.output:
        write_or_print(args, text)
        if model is not None and not args.json:
            message(f"model at n={args.check_n}: {'yes' if model else 'no'}")
        return

    write_text(args.output, text)
    lines = [f"Wrote {args.output}"]
    if model is not None:
        lines.append(f"model at n={args.check_n}: {'yes' if model else 'no'}")
    report(
        args,
        "\n".join(lines),
        output=args.output,
        equations=len(output.system.equations),
        variables=len(output.system.vars),
        model=model,
    )


def generate_example(args):
    text = source(args.name, t=args.t)
    # Parse once so that generated files are always valid
    gen(args.name, t=args.t)
    write_or_print(args, text, args.output)


def verify_witness_file(args):
    system = load_system(args)
    witness = Witness.load(args.witness)
    claim = witness.count if args.claim is None else args.claim
    witness.verify(system, claim)
    report(args, f"verified: {claim}", verified=True, count=claim)
