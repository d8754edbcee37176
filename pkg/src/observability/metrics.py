"""
Metrics Collection

Prometheus metrics for sampler throughput and experiment timing.
The registry is private to this package so importing it never touches
the prometheus_client global registry.
"""

from typing import Optional

from prometheus_client import CollectorRegistry, Counter, Histogram, generate_latest

from observability.logger import get_logger

logger = get_logger(__name__)

_SAMPLE_LABELS = ("model", "algorithm")


class MetricsRegistry:
    """Registry holding every randomizer metric"""

    def __init__(self):
        self.registry = CollectorRegistry(auto_describe=True)

        self.samples = Counter(
            "randomizer_samples", "Random graphs sampled",
            _SAMPLE_LABELS, registry=self.registry
        )
        self.pairs_evaluated = Counter(
            "randomizer_pairs_evaluated", "Node pairs whose edge probability was computed",
            _SAMPLE_LABELS, registry=self.registry
        )
        self.pairs_skipped = Counter(
            "randomizer_pairs_skipped", "Node pairs passed over by geometric skips",
            _SAMPLE_LABELS, registry=self.registry
        )
        self.clamped_pairs = Counter(
            "randomizer_clamped_pairs", "Kernel values clamped into [0, 1]",
            _SAMPLE_LABELS, registry=self.registry
        )
        self.edges_emitted = Counter(
            "randomizer_edges_emitted", "Edges in sampled graphs",
            _SAMPLE_LABELS, registry=self.registry
        )
        self.sample_duration = Histogram(
            "randomizer_sample_duration_seconds", "Wall time of one sample",
            _SAMPLE_LABELS, registry=self.registry
        )
        self.operation_duration = Histogram(
            "randomizer_operation_duration_seconds", "Wall time of traced operations",
            ("operation",), registry=self.registry
        )

    def export_prometheus(self) -> str:
        """Export metrics in Prometheus text format"""
        return generate_latest(self.registry).decode("utf-8")


# Global registry
_registry = MetricsRegistry()


def get_registry() -> MetricsRegistry:
    """Get global metrics registry"""
    return _registry


def reset_registry() -> MetricsRegistry:
    """Replace the global registry with an empty one"""
    global _registry
    _registry = MetricsRegistry()
    return _registry


def record_sample(
    model: str,
    algorithm: str,
    pairs_evaluated: int,
    pairs_skipped: int,
    clamped_pairs: int,
    edges_emitted: int,
    seconds: Optional[float] = None
) -> None:
    """
    Record the counters of one finished sample

    Args:
        model: Edge probability model name
        algorithm: Sampling algorithm name
        pairs_evaluated: Pairs whose probability was computed
        pairs_skipped: Pairs never evaluated
        clamped_pairs: Kernel values clamped into range
        edges_emitted: Edges in the output graph
        seconds: Optional wall time of the sample
    """
    registry = get_registry()
    labels = {"model": model, "algorithm": algorithm}

    registry.samples.labels(**labels).inc()
    registry.pairs_evaluated.labels(**labels).inc(pairs_evaluated)
    registry.pairs_skipped.labels(**labels).inc(pairs_skipped)
    registry.clamped_pairs.labels(**labels).inc(clamped_pairs)
    registry.edges_emitted.labels(**labels).inc(edges_emitted)
    if seconds is not None:
        registry.sample_duration.labels(**labels).observe(seconds)


def observe_operation(operation: str, seconds: float) -> None:
    """Record the duration of a traced operation"""
    get_registry().operation_duration.labels(operation=operation).observe(seconds)


def write_metrics(path: str) -> None:
    """Write the Prometheus exposition to a file"""
    with open(path, "w", encoding="utf-8") as f:
        f.write(get_registry().export_prometheus())
    logger.info("metrics_written", path=path)
