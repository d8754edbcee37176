"""
Experiment Runner

Degree fidelity experiments comparing the Chung-Lu and combinatorial
kernels:

- run_compare: randomize one graph many times, report per-node degree
  mean and standard deviation under each kernel
- run_sweep: for each density, generate a synthetic graph, randomize it
  and measure how far the average degree drifts from the given one

Seeds are counter-based, so results do not depend on the worker count:

    compare trial t          derive_seed(seed, t)
    sweep generator (d, t)   derive_seed(seed, d, t, 0)
    sweep sampler   (d, t)   derive_seed(seed, d, t, 1)

Within a trial both kernels use the same sampler seed.
"""

import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple, TypeVar

import numpy as np
from tqdm import tqdm

from config.randomizer_config import get_config
from errors import ParameterError
from experiments.reports import SweepRow, TrialReport
from generators.factory import GraphFamily, generate, spec_for_density
from graph.graph import Graph, WeightSeq, degree_sequence
from observability.logger import get_logger
from observability.tracer import trace_context
from probability.kernels import (
    ClampCounter,
    EdgeProbabilityModel,
    ModelKind,
    ProbabilityMode,
)
from sampling.rng import MAX_SEED, derive_seed
from sampling.sampler import SamplerConfig, SamplingAlgorithm, sample

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")

MODELS = (ModelKind.CHUNG_LU, ModelKind.COMBINATORIAL)


def expected_degrees(
    weights: WeightSeq,
    kind: ModelKind,
    mode: ProbabilityMode = ProbabilityMode.CLAMP,
    counter: Optional[ClampCounter] = None
) -> np.ndarray:
    """
    Expected realised degree sum_j p(i, j) of every node

    Args:
        weights: Expected degree sequence
        kind: Kernel
        mode: Range handling for the combinatorial kernel
        counter: Clamp counter

    Returns:
        Array of length n
    """
    n = weights.n
    if n < 2:
        return np.zeros(n)

    model = EdgeProbabilityModel.from_weights(kind, weights)
    w = weights.as_array()
    result = np.empty(n)
    for i in range(n):
        row = model.row_probabilities(float(w[i]), w, mode, counter)
        row[i] = 0.0
        result[i] = math.fsum(row)
    return result


def parse_densities(text: str) -> List[float]:
    """
    Parse "start:stop:step" (stop inclusive) or "d1,d2,..."

    Raises:
        ParameterError: Malformed text, or a density outside (0, 1)
    """
    text = text.strip()
    is_range = ":" in text
    try:
        parts = [float(part) for part in text.split(":" if is_range else ",") if part.strip()]
    except ValueError as e:
        raise ParameterError(f"cannot parse densities {text!r}: {e}") from e

    if is_range:
        if len(parts) != 3:
            raise ParameterError(f"density range must be start:stop:step, got {text!r}")
        start, stop, step = parts
        if step <= 0:
            raise ParameterError(f"density step must be > 0, got {step}")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        densities = [round(start + k * step, 10) for k in range(max(count, 0))]
    else:
        densities = parts

    if not densities:
        raise ParameterError(f"no densities in {text!r}")
    for density in densities:
        if not 0.0 < density < 1.0:
            raise ParameterError(f"sweep densities must lie in (0, 1), got {density}")
    return densities


def _sample_degrees(
    weights: WeightSeq,
    seed: int,
    mode: ProbabilityMode,
    algorithm: SamplingAlgorithm
) -> Tuple[np.ndarray, np.ndarray]:
    """Realised degrees under each kernel, sharing one seed"""
    degrees = []
    for kind in MODELS:
        config = SamplerConfig(kind=kind, seed=seed, mode=mode, algorithm=algorithm)
        graph, _ = sample(weights, config)
        degrees.append(graph.degrees())
    return degrees[0], degrees[1]


def _compare_trial(task: Tuple[WeightSeq, int, ProbabilityMode, SamplingAlgorithm]):
    weights, seed, mode, algorithm = task
    return _sample_degrees(weights, seed, mode, algorithm)


def _sweep_trial(task: Tuple[GraphFamily, int, float, int, int, ProbabilityMode, SamplingAlgorithm]):
    family, n, density, generator_seed, sampler_seed, mode, algorithm = task
    given = generate(spec_for_density(family, n, density, generator_seed))
    cl, comb = _sample_degrees(degree_sequence(given), sampler_seed, mode, algorithm)
    given_mean = 2.0 * given.m / n
    return float(cl.mean()) - given_mean, float(comb.mean()) - given_mean


def _sample_std(total: np.ndarray, squares: np.ndarray, count: int) -> np.ndarray:
    if count < 2:
        return np.zeros_like(total, dtype=float)
    variance = (squares - total * total / count) / (count - 1)
    return np.sqrt(np.maximum(variance, 0.0))


class ExperimentRunner:
    """
    Runs the fidelity experiments with a configurable worker pool

    Unset arguments fall back to get_config().
    """

    def __init__(
        self,
        max_workers: Optional[int] = None,
        show_progress: Optional[bool] = None,
        mode: Optional[ProbabilityMode] = None,
        algorithm: Optional[SamplingAlgorithm] = None
    ):
        config = get_config()
        self.max_workers = config.experiment.max_workers if max_workers is None else max_workers
        self.show_progress = (
            config.experiment.show_progress if show_progress is None else show_progress
        )
        self.mode = ProbabilityMode(config.sampling.mode if mode is None else mode)
        self.algorithm = SamplingAlgorithm(config.sampling.algorithm if algorithm is None else algorithm)

        if self.max_workers < 1:
            raise ParameterError(f"max_workers must be >= 1, got {self.max_workers}")

    def _map(self, func: Callable[[T], R], tasks: Iterable[T], total: int, desc: str) -> Iterator[R]:
        """Order-preserving map, in-process or over a process pool"""
        progress = dict(total=total, desc=desc, disable=not self.show_progress, file=sys.stderr)
        if self.max_workers == 1:
            yield from tqdm(map(func, tasks), **progress)
            return

        chunksize = max(1, total // (self.max_workers * 4))
        with ProcessPoolExecutor(max_workers=self.max_workers) as pool:
            yield from tqdm(pool.map(func, tasks, chunksize=chunksize), **progress)

    def run_compare(self, g: Graph, trials: int, seed: int) -> TrialReport:
        """
        Per-node degree fidelity of both kernels on one graph

        Args:
            g: Given graph; its degree sequence is the sampler input
            trials: Randomizations per kernel (>= 1)
            seed: Master seed

        Returns:
            TrialReport ordered by nonincreasing original degree
        """
        if trials < 1:
            raise ParameterError(f"trials must be >= 1, got {trials}")
        if not 0 <= seed <= MAX_SEED:
            raise ParameterError(f"seed must lie in [0, {MAX_SEED}], got {seed}")

        with trace_context("run_compare", n=g.n, m=g.m, trials=trials) as span:
            weights = degree_sequence(g)
            tasks = (
                (weights, derive_seed(seed, t), self.mode, self.algorithm)
                for t in range(trials)
            )

            sums = np.zeros((2, g.n))
            squares = np.zeros((2, g.n))
            for cl, comb in self._map(_compare_trial, tasks, trials, "compare"):
                for k, degrees in enumerate((cl, comb)):
                    sums[k] += degrees
                    squares[k] += degrees.astype(float) ** 2

            original = g.degrees()
            order = np.argsort(-original, kind="stable")
            means = sums / trials
            stds = _sample_std(sums, squares, trials)

            report = TrialReport(
                nodes=[g.labels[i] for i in order.tolist()],
                original_degree=original[order],
                mean_degree_cl=means[0][order],
                mean_degree_comb=means[1][order],
                std_degree_cl=stds[0][order],
                std_degree_comb=stds[1][order],
                trials=trials,
            )
            span.add_attribute("rows", len(report))

        logger.info("compare_finished", n=g.n, m=g.m, trials=trials)
        return report

    def run_sweep(
        self,
        family: GraphFamily,
        n: int,
        densities: Sequence[float],
        trials: int,
        seed: int
    ) -> List[SweepRow]:
        """
        Average degree drift of both kernels across densities

        Args:
            family: Synthetic graph family
            n: Node count
            densities: Densities in (0, 1)
            trials: (generate, randomize) repetitions per density
            seed: Master seed

        Returns:
            One SweepRow per density, in input order
        """
        family = GraphFamily(family)
        if trials < 1:
            raise ParameterError(f"trials must be >= 1, got {trials}")
        if not 0 <= seed <= MAX_SEED:
            raise ParameterError(f"seed must lie in [0, {MAX_SEED}], got {seed}")
        for density in densities:
            if not 0.0 < density < 1.0:
                raise ParameterError(f"sweep densities must lie in (0, 1), got {density}")

        label = "BA" if family is GraphFamily.BA else "ER"
        rows = []
        with trace_context("run_sweep", family=family.value, n=n, trials=trials):
            for d, density in enumerate(densities):
                tasks = (
                    (
                        family, n, density,
                        derive_seed(seed, d, t, 0), derive_seed(seed, d, t, 1),
                        self.mode, self.algorithm,
                    )
                    for t in range(trials)
                )
                diffs = np.asarray(
                    list(self._map(_sweep_trial, tasks, trials, f"density {density:g}")),
                    dtype=float,
                ).reshape(trials, 2)

                signed = diffs.mean(axis=0)
                absolute = np.abs(diffs).mean(axis=0)
                std = diffs.std(axis=0, ddof=1) if trials > 1 else np.zeros(2)

                row = SweepRow(
                    family=label,
                    n=n,
                    density=float(density),
                    trials=trials,
                    mean_abs_diff_cl=float(absolute[0]),
                    mean_abs_diff_comb=float(absolute[1]),
                    signed_diff_cl=float(signed[0]),
                    signed_diff_comb=float(signed[1]),
                    std_cl=float(std[0]),
                    std_comb=float(std[1]),
                )
                rows.append(row)
                logger.info(
                    "sweep_point",
                    family=label,
                    density=density,
                    mean_abs_diff_cl=round(row.mean_abs_diff_cl, 6),
                    mean_abs_diff_comb=round(row.mean_abs_diff_comb, 6),
                )
        return rows


def run_compare(g: Graph, trials: int, seed: int, **runner_options) -> TrialReport:
    """Module-level shortcut for ExperimentRunner(**runner_options).run_compare"""
    return ExperimentRunner(**runner_options).run_compare(g, trials, seed)


def run_sweep(
    family: GraphFamily,
    n: int,
    densities: Sequence[float],
    trials: int,
    seed: int,
    **runner_options
) -> List[SweepRow]:
    """Module-level shortcut for ExperimentRunner(**runner_options).run_sweep"""
    return ExperimentRunner(**runner_options).run_sweep(family, n, densities, trials, seed)
