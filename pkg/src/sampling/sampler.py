"""
Random Graph Samplers

Draws a simple graph in which every node pair (i, j) is an edge
independently with the kernel probability p(w_i, w_j).

- sample_naive: visits all n(n-1)/2 pairs, one uniform per pair, O(n^2)
- sample_skipping: visits nodes in nonincreasing weight order and jumps
  over runs of unlikely partners with geometric skips bounded by a
  running cap probability, O(n + m)

Both produce the same distribution over graphs. Row i always uses the
stream row_generator(seed, i), so rows are independent of each other.
"""

import math
import time
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from errors import DomainError, MonotonicityViolationError, NonGraphicalInputError
from graph.graph import Graph, WeightSeq
from observability.logger import get_logger
from observability.metrics import record_sample
from probability.kernels import (
    ClampCounter,
    EdgeProbabilityModel,
    ModelKind,
    ProbabilityMode,
)
from sampling.rng import MAX_SEED, row_generator

logger = get_logger(__name__)

# Relative slack for floating rounding before the monotonicity guard fires
MONOTONICITY_TOLERANCE = 1e-12


class SamplingAlgorithm(str, Enum):
    NAIVE = "naive"
    SKIPPING = "skipping"


class SamplerConfig(BaseModel):
    """Everything that, together with the weights, determines a sample"""
    model_config = ConfigDict(frozen=True)

    kind: ModelKind = Field(default=ModelKind.COMBINATORIAL)
    seed: int = Field(..., ge=0, le=MAX_SEED)
    mode: ProbabilityMode = Field(default=ProbabilityMode.CLAMP)
    algorithm: SamplingAlgorithm = Field(default=SamplingAlgorithm.SKIPPING)


@dataclass
class SampleDiagnostics:
    """Work counters for one sample"""
    pairs_evaluated: int = 0
    pairs_skipped: int = 0
    clamped_pairs: int = 0
    edges_emitted: int = 0

    def merge(self, other: "SampleDiagnostics") -> "SampleDiagnostics":
        return SampleDiagnostics(
            self.pairs_evaluated + other.pairs_evaluated,
            self.pairs_skipped + other.pairs_skipped,
            self.clamped_pairs + other.clamped_pairs,
            self.edges_emitted + other.edges_emitted,
        )


def _check_inputs(weights: WeightSeq) -> None:
    if weights.n < 2:
        raise DomainError(f"sampling needs at least 2 nodes, got {weights.n}")


def sample_naive(weights: WeightSeq, config: SamplerConfig) -> Tuple[Graph, SampleDiagnostics]:
    """
    Reference sampler: one uniform draw per pair, rows i < j in index order

    Args:
        weights: Expected degree sequence
        config: Kernel, seed and range mode

    Returns:
        (sampled graph labelled "0".."n-1", diagnostics)

    Raises:
        NonGraphicalInputError: STRICT mode and an out-of-range pair
    """
    _check_inputs(weights)
    n = weights.n
    w = weights.weights

    counter = ClampCounter()
    model = EdgeProbabilityModel.from_weights(config.kind, weights)
    kernel = model.pair_function(config.mode, counter)

    edges = []
    for i in range(n - 1):
        uniforms = row_generator(config.seed, i).random(n - 1 - i).tolist()
        w_i = w[i]
        for j, u in enumerate(uniforms, start=i + 1):
            try:
                p = kernel(w_i, w[j])
            except NonGraphicalInputError as e:
                raise e.at_pair(i, j) from e
            if u < p:
                edges.append((i, j))

    diagnostics = SampleDiagnostics(
        pairs_evaluated=n * (n - 1) // 2,
        pairs_skipped=0,
        clamped_pairs=counter.count,
        edges_emitted=len(edges),
    )
    return Graph.from_index_edges(n, edges), diagnostics


def sample_skipping(weights: WeightSeq, config: SamplerConfig) -> Tuple[Graph, SampleDiagnostics]:
    """
    Linear-time sampler with geometric skipping

    Nodes are sorted by nonincreasing weight (ties by index). Along row u
    the probability can only fall, so a cap p_cap (the last probability
    seen) bounds every candidate ahead: skip floor(ln U / ln(1 - p_cap))
    candidates, then accept the landed one with probability p / p_cap.

    Args:
        weights: Expected degree sequence
        config: Kernel, seed and range mode

    Returns:
        (sampled graph labelled "0".."n-1" in original index order, diagnostics)

    Raises:
        NonGraphicalInputError: STRICT mode and an out-of-range pair
        MonotonicityViolationError: A landed probability exceeds the cap
    """
    _check_inputs(weights)
    n = weights.n

    w = weights.as_array()
    order = np.argsort(-w, kind="stable")
    ws = w[order].tolist()
    nodes = order.tolist()

    counter = ClampCounter()
    model = EdgeProbabilityModel.from_weights(config.kind, weights)
    kernel = model.pair_function(config.mode, counter)

    edges = []
    evaluated = 0
    for u in range(n - 1):
        w_u = ws[u]
        v = u + 1
        try:
            q = kernel(w_u, ws[v])
        except NonGraphicalInputError as e:
            raise e.at_pair(nodes[u], nodes[v]) from e
        evaluated += 1
        first = v
        p_cap = q
        if p_cap <= 0.0:
            continue

        rng = row_generator(config.seed, u)
        while v < n and p_cap > 0.0:
            if p_cap < 1.0:
                skip = math.log(1.0 - rng.random()) / math.log1p(-p_cap)
                if skip >= n - v:
                    break
                v += int(skip)

            if v != first:
                try:
                    q = kernel(w_u, ws[v])
                except NonGraphicalInputError as e:
                    raise e.at_pair(nodes[u], nodes[v]) from e
                evaluated += 1

            if q > p_cap * (1.0 + MONOTONICITY_TOLERANCE):
                raise MonotonicityViolationError(nodes[u], nodes[v], q, p_cap)
            if rng.random() * p_cap < q:
                edges.append((nodes[u], nodes[v]))
            p_cap = q
            v += 1

    total_pairs = n * (n - 1) // 2
    diagnostics = SampleDiagnostics(
        pairs_evaluated=evaluated,
        pairs_skipped=total_pairs - evaluated,
        clamped_pairs=counter.count,
        edges_emitted=len(edges),
    )
    return Graph.from_index_edges(n, edges), diagnostics


def sample(weights: WeightSeq, config: SamplerConfig) -> Tuple[Graph, SampleDiagnostics]:
    """
    Sample with the configured algorithm, recording metrics

    Args:
        weights: Expected degree sequence
        config: Sampler configuration

    Returns:
        (sampled graph, diagnostics)
    """
    start = time.perf_counter()
    if config.algorithm is SamplingAlgorithm.NAIVE:
        graph, diagnostics = sample_naive(weights, config)
    else:
        graph, diagnostics = sample_skipping(weights, config)
    elapsed = time.perf_counter() - start

    record_sample(
        config.kind.value,
        config.algorithm.value,
        diagnostics.pairs_evaluated,
        diagnostics.pairs_skipped,
        diagnostics.clamped_pairs,
        diagnostics.edges_emitted,
        elapsed,
    )
    logger.debug(
        "sample_done",
        model=config.kind.value,
        algorithm=config.algorithm.value,
        nodes=weights.n,
        edges=diagnostics.edges_emitted,
        evaluated=diagnostics.pairs_evaluated,
        clamped=diagnostics.clamped_pairs,
        seconds=round(elapsed, 6),
    )
    return graph, diagnostics
