"""
Tests for the naive and skipping samplers
"""

import math
import statistics
import time

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from errors import DomainError, MonotonicityViolationError, NonGraphicalInputError
from generators.erdos_renyi import generate_er_gnm, generate_er_gnp
from graph.graph import Graph, WeightSeq, degree_sequence
from observability.metrics import reset_registry
from probability.kernels import EdgeProbabilityModel, ModelKind, ProbabilityMode
from sampling.rng import derive_seed, row_generator
from sampling.sampler import (
    SampleDiagnostics,
    SamplerConfig,
    SamplingAlgorithm,
    sample,
    sample_naive,
    sample_skipping,
)

SAMPLERS = [sample_naive, sample_skipping]


def config(seed: int = 7, kind=ModelKind.COMBINATORIAL, mode=ProbabilityMode.CLAMP, **kwargs):
    return SamplerConfig(kind=kind, seed=seed, mode=mode, **kwargs)


def pair_probabilities(weights: WeightSeq, kind: ModelKind) -> np.ndarray:
    model = EdgeProbabilityModel.from_weights(kind, weights)
    w = weights.as_array()
    return np.array([model.row_probabilities(float(w_i), w) for w_i in w])


def assert_simple(g: Graph):
    seen = set()
    for i, j in g.edges:
        assert i < j
        assert (i, j) not in seen
        seen.add((i, j))
    assert len(seen) == g.m


@st.composite
def graph_degrees(draw, max_n: int = 14):
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    degrees = [0] * n
    for i, j in chosen:
        degrees[i] += 1
        degrees[j] += 1
    return degrees


class TestSamplerConfig:
    """Test configuration validation"""

    def test_defaults(self):
        """Combinatorial kernel, clamp mode, skipping sampler"""
        cfg = SamplerConfig(seed=1)

        assert cfg.kind is ModelKind.COMBINATORIAL
        assert cfg.mode is ProbabilityMode.CLAMP
        assert cfg.algorithm is SamplingAlgorithm.SKIPPING

    @pytest.mark.parametrize("seed", [-1, 2 ** 64])
    def test_seed_range(self, seed):
        """Seeds are unsigned 64-bit"""
        with pytest.raises(ValidationError):
            SamplerConfig(seed=seed)

    def test_frozen(self):
        """Configs cannot change after creation"""
        cfg = SamplerConfig(seed=1)

        with pytest.raises(ValidationError):
            cfg.seed = 2

    def test_diagnostics_merge(self):
        """Counters add up"""
        merged = SampleDiagnostics(1, 2, 3, 4).merge(SampleDiagnostics(10, 20, 30, 40))

        assert merged == SampleDiagnostics(11, 22, 33, 44)


class TestRng:
    """Test seeded streams"""

    def test_row_streams_reproducible(self):
        """Same seed and row, same numbers"""
        a = row_generator(5, 3).random(4)
        b = row_generator(5, 3).random(4)

        np.testing.assert_array_equal(a, b)

    def test_rows_differ(self):
        """Different rows are different streams"""
        assert row_generator(5, 3).random() != row_generator(5, 4).random()

    def test_derived_seeds(self):
        """Derived seeds are stable 64-bit integers keyed by the counter"""
        seed = derive_seed(42, 0)

        assert seed == derive_seed(42, 0)
        assert seed != derive_seed(42, 1)
        assert derive_seed(42, 0, 1, 0) != derive_seed(42, 0, 1, 1)
        assert 0 <= seed < 2 ** 64


class TestSamplers:
    """Behaviour shared by both samplers"""

    @pytest.mark.parametrize("sampler", SAMPLERS)
    @pytest.mark.parametrize("n", [2, 5, 12])
    def test_complete_graph(self, sampler, n):
        """K_n weights give K_n with certainty"""
        weights = WeightSeq.of([n - 1] * n)
        g, diagnostics = sampler(weights, config())

        assert g.m == n * (n - 1) // 2
        assert diagnostics.pairs_skipped == 0
        assert diagnostics.edges_emitted == g.m

    @pytest.mark.parametrize("sampler", SAMPLERS)
    def test_zero_weights(self, sampler):
        """All-zero weights give the empty graph"""
        g, diagnostics = sampler(WeightSeq.of([0] * 8), config())

        assert g.m == 0
        assert diagnostics.pairs_evaluated + diagnostics.pairs_skipped == 28

    @pytest.mark.parametrize("sampler", SAMPLERS)
    def test_star_in_original_order(self, sampler):
        """Output indices follow the input order, not the sorted order"""
        g, _ = sampler(WeightSeq.of([1, 1, 1, 3]), config())

        assert g.edges == ((0, 3), (1, 3), (2, 3))

    @pytest.mark.parametrize("sampler", SAMPLERS)
    def test_deterministic(self, sampler, karate):
        """A fixed seed reproduces the graph; another seed does not"""
        weights = degree_sequence(karate)

        first, _ = sampler(weights, config(seed=11))
        again, _ = sampler(weights, config(seed=11))
        other, _ = sampler(weights, config(seed=12))

        assert first.edges == again.edges
        assert first.edges != other.edges

    @pytest.mark.parametrize("sampler", SAMPLERS)
    def test_too_few_nodes(self, sampler):
        """Sampling needs a pair"""
        with pytest.raises(DomainError):
            sampler(WeightSeq.of([0]), config())

    @pytest.mark.parametrize("sampler", SAMPLERS)
    def test_strict_names_pair(self, sampler):
        """Strict mode stops at the first impossible pair"""
        weights = WeightSeq.of([6, 6, 6, 1, 1])

        with pytest.raises(NonGraphicalInputError) as info:
            sampler(weights, config(mode=ProbabilityMode.STRICT))
        assert info.value.pair is not None

    def test_clamp_counts(self):
        """Clamp mode finishes and reports clamping"""
        weights = WeightSeq.of([6, 6, 6, 1, 1])
        g, diagnostics = sample_naive(weights, config(mode=ProbabilityMode.CLAMP))

        assert diagnostics.clamped_pairs > 0
        assert_simple(g)


class TestSkipping:
    """Skipping sampler specifics"""

    def test_skips_sparse_pairs(self):
        """Most pairs of a sparse graph are never evaluated"""
        weights = degree_sequence(generate_er_gnm(2000, 4000, seed=3))
        _, diagnostics = sample_skipping(weights, config(kind=ModelKind.CHUNG_LU))

        total = 2000 * 1999 // 2
        assert diagnostics.pairs_evaluated + diagnostics.pairs_skipped == total
        assert diagnostics.pairs_skipped > 0.9 * total

    def test_monotonicity_guard(self, monkeypatch):
        """A kernel that grows along the row is detected"""
        def rising(self, mode, counter=None):
            return lambda w_i, w_j: 0.5 if w_j > 2 else 0.9

        monkeypatch.setattr(EdgeProbabilityModel, "pair_function", rising)
        weights = WeightSeq.of([5, 5, 5] + [1] * 60)

        with pytest.raises(MonotonicityViolationError):
            sample_skipping(weights, config())

    def test_edge_count_matches_expectation(self):
        """Chung-Lu edges on ER weights stay within 5 sigma of sum p"""
        weights = degree_sequence(generate_er_gnm(1000, 4995, seed=21))
        p = pair_probabilities(weights, ModelKind.CHUNG_LU)
        upper = p[np.triu_indices(1000, k=1)]
        mean, sd = upper.sum(), math.sqrt((upper * (1 - upper)).sum())

        g, _ = sample_skipping(weights, config(kind=ModelKind.CHUNG_LU, seed=99))
        assert abs(g.m - mean) <= 5 * sd


class TestDistribution:
    """Both samplers draw each pair with its kernel probability"""

    TRIALS = 20000

    @pytest.mark.slow
    @pytest.mark.parametrize("sampler", SAMPLERS)
    def test_two_star_frequencies(self, sampler, two_star_weights):
        """Per-pair frequencies within 4 sigma of the kernel"""
        p = pair_probabilities(two_star_weights, ModelKind.COMBINATORIAL)
        counts = np.zeros((12, 12))
        for t in range(self.TRIALS):
            g, _ = sampler(two_star_weights, config(seed=derive_seed(2024, t)))
            for i, j in g.edges:
                counts[i, j] += 1

        frequency = counts / self.TRIALS
        for i in range(12):
            for j in range(i + 1, 12):
                sigma = math.sqrt(p[i, j] * (1 - p[i, j]) / self.TRIALS)
                assert abs(frequency[i, j] - p[i, j]) <= 4 * sigma + 1 / self.TRIALS
        assert abs(frequency[0, 6] - 125 / 129) <= 4 * math.sqrt(125 * 4 / 129 ** 2 / self.TRIALS)

    @pytest.mark.parametrize("kind", list(ModelKind))
    def test_samplers_agree_on_karate(self, kind, karate):
        """Mean degrees of both samplers agree within sampling noise"""
        weights = degree_sequence(karate)
        trials = 400
        totals = {sampler: np.zeros(34) for sampler in SAMPLERS}
        for t in range(trials):
            for sampler in SAMPLERS:
                g, _ = sampler(weights, config(kind=kind, seed=derive_seed(5, t)))
                totals[sampler] += g.degrees()

        p = pair_probabilities(weights, kind)
        np.fill_diagonal(p, 0.0)
        expected = p.sum(axis=1)
        sd = np.sqrt((p * (1 - p)).sum(axis=1) / trials)
        for sampler in SAMPLERS:
            assert np.all(np.abs(totals[sampler] / trials - expected) <= 4 * sd + 1e-9)


class TestStructuralInvariants:
    """Fuzzed invariants"""

    @given(
        weights=st.lists(st.floats(min_value=0, max_value=20), min_size=2, max_size=15),
        seed=st.integers(min_value=0, max_value=2 ** 64 - 1),
        kind=st.sampled_from(list(ModelKind)),
    )
    def test_arbitrary_weights(self, weights, seed, kind):
        """Clamp mode always yields a simple graph, reproducibly"""
        ws = WeightSeq.of(weights)
        cfg = config(seed=seed, kind=kind)
        g, diagnostics = sample_naive(ws, cfg)
        again, _ = sample_naive(ws, cfg)

        assert_simple(g)
        assert g.n == len(weights)
        assert g.edges == again.edges
        assert diagnostics.edges_emitted == g.m

    @given(
        degrees=graph_degrees(),
        seed=st.integers(min_value=0, max_value=2 ** 64 - 1),
        kind=st.sampled_from(list(ModelKind)),
    )
    def test_graphical_weights(self, degrees, seed, kind):
        """Graphical inputs never clamp nor trip the monotonicity guard"""
        ws = WeightSeq.of(degrees)
        cfg = config(seed=seed, kind=kind, mode=ProbabilityMode.STRICT)

        g, diagnostics = sample_skipping(ws, cfg)
        again, _ = sample_skipping(ws, cfg)

        assert_simple(g)
        assert g.edges == again.edges
        assert diagnostics.clamped_pairs == 0
        assert diagnostics.pairs_evaluated + diagnostics.pairs_skipped == len(degrees) * (len(degrees) - 1) // 2


class TestSampleDispatch:
    """Test the metered entry point"""

    @pytest.mark.parametrize("algorithm", list(SamplingAlgorithm))
    def test_records_metrics(self, algorithm, two_star_weights):
        """Each sample bumps the counters"""
        registry = reset_registry()
        cfg = config(algorithm=algorithm)
        g, diagnostics = sample(two_star_weights, cfg)

        labels = {"model": "combinatorial", "algorithm": algorithm.value}
        value = registry.registry.get_sample_value
        assert value("randomizer_samples_total", labels) == 1
        assert value("randomizer_edges_emitted_total", labels) == g.m
        assert value("randomizer_pairs_evaluated_total", labels) == diagnostics.pairs_evaluated
        assert "randomizer_sample_duration_seconds" in registry.export_prometheus()

    def test_dispatch_matches_direct_call(self, karate):
        """sample() returns what the chosen sampler returns"""
        weights = degree_sequence(karate)
        cfg = config(seed=3, algorithm=SamplingAlgorithm.NAIVE)

        assert sample(weights, cfg)[0].edges == sample_naive(weights, cfg)[0].edges


@pytest.mark.slow
class TestComplexity:
    """Wall-time scaling at fixed average degree"""

    @staticmethod
    def median_time(func, runs: int) -> float:
        times = []
        for _ in range(runs):
            start = time.perf_counter()
            func()
            times.append(time.perf_counter() - start)
        return statistics.median(times)

    def test_skipping_is_linear(self):
        """Doubling n at most ~2.5x the time"""
        timings = []
        for n in (4000, 8000, 16000):
            weights = degree_sequence(generate_er_gnp(n, 10 / (n - 1), seed=n))
            cfg = config(kind=ModelKind.COMBINATORIAL, seed=1)
            timings.append(self.median_time(lambda: sample_skipping(weights, cfg), 5))

        for smaller, larger in zip(timings, timings[1:]):
            assert larger / smaller <= 2.5

    def test_naive_is_quadratic(self):
        """Doubling n roughly quadruples the time"""
        timings = []
        for n in (2000, 4000):
            weights = degree_sequence(generate_er_gnp(n, 0.01, seed=n))
            cfg = config(kind=ModelKind.CHUNG_LU, seed=1)
            timings.append(self.median_time(lambda: sample_naive(weights, cfg), 3))

        assert timings[1] / timings[0] >= 3.5
