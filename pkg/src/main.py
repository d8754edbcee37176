"""
Degree-Sequence Randomizer - Main Entry Point

Command-line interface:

    prob       edge probability of one node pair
    randomize  random graph with the expected degrees of an input graph
    degrees    degree sequence of an edge list
    compare    per-node degree fidelity of both kernels (CSV)
    sweep      average degree drift across densities (CSV)
    generate   synthetic Erdős–Rényi or Barabási–Albert graph

Exit codes: 0 success, 1 usage error, 2 data or domain error.
"""

import argparse
import sys
from pathlib import Path
from typing import List, NoReturn, Optional

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(project_root / "src"))

import pandas as pd
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape

from config.randomizer_config import get_config
from errors import DomainError, RandomizerError
from evaluation.fidelity import evaluate_report
from experiments.reports import select_models, sweep_frame, write_csv
from experiments.runner import ExperimentRunner, parse_densities
from generators.factory import GeneratorSpec, GraphFamily, generate
from graph.datasets import KARATE_CLUB_PATH
from graph.edge_list import load_edge_list, save_edge_list, write_edge_list
from graph.graph import Graph, degree_sequence
from observability.logger import configure_logging, get_logger
from observability.metrics import write_metrics
from observability.tracer import trace_operation
from probability.kernels import (
    ClampCounter,
    EdgeProbabilityModel,
    ModelKind,
    ProbabilityMode,
    combinatorial_terms,
)
from probability.oracle import oracle_p
from sampling.rng import MAX_SEED, fresh_seed
from sampling.sampler import SamplerConfig, SamplingAlgorithm, sample

logger = get_logger(__name__)
console = Console(stderr=True, soft_wrap=True)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

FAMILIES = {
    "er": GraphFamily.ER_GNM,
    "er-gnm": GraphFamily.ER_GNM,
    "er-gnp": GraphFamily.ER_GNP,
    "ba": GraphFamily.BA,
}


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with code 1"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _number(text: str) -> float:
    """Integer when the text is one, so integral inputs stay exact"""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}")
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must lie in [0, {MAX_SEED}]")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _resolve_seed(seed: Optional[int]) -> int:
    """Given seed, or a fresh one; either way reported on stderr"""
    if seed is None:
        seed = fresh_seed()
    console.print(f"seed: {seed}")
    return seed


def _write_graph(g: Graph, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.flush()
        write_edge_list(g, sys.stdout.buffer)
        sys.stdout.buffer.flush()
    else:
        save_edge_list(g, output)


def _runner(args: argparse.Namespace) -> ExperimentRunner:
    return ExperimentRunner(
        max_workers=args.workers,
        show_progress=args.progress or None,
        mode=args.mode,
        algorithm=args.algorithm,
    )


def cmd_prob(args: argparse.Namespace) -> int:
    """Edge probability of one pair, plus the exact value when available"""
    kind = ModelKind(args.model)
    mode = ProbabilityMode(args.mode or get_config().sampling.prob_mode)
    counter = ClampCounter()

    model = EdgeProbabilityModel.from_counts(kind, args.n, args.m)
    p = model.probability(args.wi, args.wj, mode, counter)
    print(f"p = {p:.12g}")

    if kind is ModelKind.COMBINATORIAL:
        terms = combinatorial_terms(args.n, args.m, args.wi, args.wj)
        if args.terms:
            print(f"m_star = {terms.m_star}")
            print(f"x = {terms.x}")
            print(f"y = {terms.y}")
        if counter.count:
            console.print(f"clamped from raw ratio {terms.p:.12g}")

        if all(isinstance(v, int) for v in (args.n, args.m, args.wi, args.wj)):
            try:
                exact, _ = oracle_p(args.n, args.m, args.wi, args.wj)
                print(f"exact = {exact}")
            except DomainError as e:
                logger.debug("oracle_unavailable", reason=str(e))
    return EXIT_OK


@trace_operation("randomize")
def cmd_randomize(args: argparse.Namespace) -> int:
    """Randomize an edge list, keeping its expected degree sequence"""
    config = get_config()
    seed = _resolve_seed(args.seed)
    given = load_edge_list(args.input)

    sampler_config = SamplerConfig(
        kind=ModelKind(args.model),
        seed=seed,
        mode=ProbabilityMode(args.mode or config.sampling.mode),
        algorithm=SamplingAlgorithm(args.algorithm or config.sampling.algorithm),
    )
    randomized, diagnostics = sample(degree_sequence(given), sampler_config)
    _write_graph(randomized.with_labels(given.labels), args.output)

    logger.info(
        "randomized",
        input=args.input,
        model=sampler_config.kind.value,
        given_edges=given.m,
        edges=randomized.m,
        clamped=diagnostics.clamped_pairs,
    )
    return EXIT_OK


def cmd_degrees(args: argparse.Namespace) -> int:
    """Degree sequence of an edge list as CSV"""
    g = load_edge_list(args.input)
    frame = pd.DataFrame({"node": list(g.labels), "degree": g.degrees()})
    write_csv(frame, args.output)
    return EXIT_OK


def _experiment_models(args: argparse.Namespace) -> List[ModelKind]:
    if args.model == "both":
        return list(ModelKind)
    return [ModelKind(args.model)]


def cmd_compare(args: argparse.Namespace) -> int:
    """Per-node degree fidelity of both kernels"""
    seed = _resolve_seed(args.seed)
    g = load_edge_list(args.input or KARATE_CLUB_PATH)
    trials = args.trials or get_config().experiment.compare_trials

    report = _runner(args).run_compare(g, trials, seed)
    kinds = _experiment_models(args)
    write_csv(select_models(report.to_frame(), kinds), args.output)

    results = evaluate_report(report, top_k=args.top_k)
    for kind in kinds:
        result = results[kind]
        console.print(
            f"{kind.value}: max-degree error {result.max_degree_error:.4g}, "
            f"top-{result.top_k} MAE {result.top_k_mae:.4g}, MAE {result.mae:.4g}"
        )
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Average degree drift of both kernels across densities"""
    config = get_config()
    seed = _resolve_seed(args.seed)
    densities = parse_densities(args.densities or config.experiment.sweep_densities)
    n = args.n or config.experiment.sweep_n
    trials = args.trials or config.experiment.sweep_trials

    rows = _runner(args).run_sweep(FAMILIES[args.family], n, densities, trials, seed)
    write_csv(select_models(sweep_frame(rows), _experiment_models(args)), args.output)
    return EXIT_OK


@trace_operation("generate")
def cmd_generate(args: argparse.Namespace) -> int:
    """Synthetic graph as an edge list"""
    seed = _resolve_seed(args.seed)
    spec = GeneratorSpec(
        family=FAMILIES[args.family],
        n=args.n,
        seed=seed,
        density=args.density,
        edge_count=args.edges,
        m_per_node=args.m_per_node,
    )
    g = generate(spec)
    _write_graph(g, args.output)
    logger.info("generated", family=spec.family.value, n=g.n, m=g.m)
    return EXIT_OK


def build_parser() -> CliParser:
    """Argument parser for every subcommand"""
    parser = CliParser(
        prog="randomizer",
        description="Random graphs with a given expected degree sequence",
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")
    parser.add_argument("--log-format", choices=["console", "json"], default=None)
    parser.add_argument("--metrics-file", default=None, help="Write Prometheus metrics here on exit")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    models = [kind.value for kind in ModelKind]
    modes = [mode.value for mode in ProbabilityMode]
    algorithms = [algorithm.value for algorithm in SamplingAlgorithm]

    prob = sub.add_parser("prob", help="Edge probability of one node pair")
    prob.add_argument("--n", type=_number, required=True)
    prob.add_argument("--m", type=_number, required=True)
    prob.add_argument("--wi", type=_number, required=True)
    prob.add_argument("--wj", type=_number, required=True)
    prob.add_argument("--model", choices=models, default=ModelKind.COMBINATORIAL.value)
    prob.add_argument("--mode", choices=modes, default=None)
    prob.add_argument("--terms", action="store_true", help="Also print m_star, x and y")
    prob.set_defaults(handler=cmd_prob)

    randomize = sub.add_parser("randomize", help="Randomize an edge list")
    randomize.add_argument("--input", required=True)
    randomize.add_argument("--model", choices=models, default=ModelKind.COMBINATORIAL.value)
    randomize.add_argument("--mode", choices=modes, default=None)
    randomize.add_argument("--algorithm", choices=algorithms, default=None)
    randomize.add_argument("--seed", type=_seed, default=None)
    randomize.add_argument("--output", default=None)
    randomize.set_defaults(handler=cmd_randomize)

    degrees = sub.add_parser("degrees", help="Degree sequence of an edge list")
    degrees.add_argument("--input", required=True)
    degrees.add_argument("--output", default=None)
    degrees.set_defaults(handler=cmd_degrees)

    for name, handler, help_text in (
        ("compare", cmd_compare, "Per-node degree fidelity of both kernels"),
        ("sweep", cmd_sweep, "Average degree drift across densities"),
    ):
        experiment = sub.add_parser(name, help=help_text)
        experiment.add_argument("--trials", type=_positive, default=None)
        experiment.add_argument("--seed", type=_seed, default=None)
        experiment.add_argument("--model", choices=[*models, "both"], default="both",
                                help="Kernel columns to keep in the report")
        experiment.add_argument("--mode", choices=modes, default=None)
        experiment.add_argument("--algorithm", choices=algorithms, default=None)
        experiment.add_argument("--workers", type=_positive, default=None)
        experiment.add_argument("--progress", action="store_true")
        experiment.add_argument("--output", default=None)
        experiment.set_defaults(handler=handler)
        if name == "compare":
            experiment.add_argument("--input", default=None,
                                    help="Edge list (default: bundled Karate Club)")
            experiment.add_argument("--top-k", type=_positive, default=5)
        else:
            experiment.add_argument("--family", choices=sorted(FAMILIES), default="er")
            experiment.add_argument("--n", type=_positive, default=None)
            experiment.add_argument("--densities", default=None,
                                    help="start:stop:step or a comma list")

    gen = sub.add_parser("generate", help="Synthetic Erdős–Rényi or Barabási–Albert graph")
    gen.add_argument("--family", choices=sorted(FAMILIES), required=True)
    gen.add_argument("--n", type=_positive, required=True)
    size = gen.add_mutually_exclusive_group(required=True)
    size.add_argument("--density", type=float)
    size.add_argument("--edges", type=int, help="Exact edge count, or BA calibration target")
    size.add_argument("--m-per-node", type=_positive)
    gen.add_argument("--seed", type=_seed, default=None)
    gen.add_argument("--output", default=None)
    gen.set_defaults(handler=cmd_generate)

    return parser


def cli_main(argv: Optional[List[str]] = None) -> int:
    """
    Run one CLI command

    Args:
        argv: Arguments without the program name (default sys.argv[1:])

    Returns:
        Exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = get_config()
        configure_logging(
            args.log_level or config.observability.log_level,
            args.log_format or config.observability.log_format,
            config.observability.log_file,
        )
        metrics_file = args.metrics_file or config.observability.metrics_file

        code = args.handler(args)

        if metrics_file:
            write_metrics(metrics_file)
        return code

    except (RandomizerError, ValidationError, OSError) as e:
        logger.debug("command_failed", command=args.command, error=str(e))
        console.print(f"[bold red]error:[/bold red] {escape(str(e))}")
        return EXIT_DATA


def run():
    """Run the application"""
    return cli_main()


if __name__ == "__main__":
    sys.exit(run())
