"""
Shared test setup: import paths, hypothesis profiles and graph fixtures
"""

import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

# Add project root and src to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))
sys.path.insert(0, str(project_root / "src"))

from graph.datasets import load_karate_club  # noqa: E402
from graph.graph import Graph, WeightSeq, degree_sequence  # noqa: E402

settings.register_profile(
    "default", max_examples=200, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "acceptance", max_examples=10000, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


def two_star_graph() -> Graph:
    """Two disjoint 6-node stars: centers 0 and 6, five leaves each"""
    edges = [(0, leaf) for leaf in range(1, 6)] + [(6, leaf) for leaf in range(7, 12)]
    return Graph.from_index_edges(12, edges)


@pytest.fixture(scope="session")
def karate() -> Graph:
    return load_karate_club()


@pytest.fixture
def two_star() -> Graph:
    return two_star_graph()


@pytest.fixture
def two_star_weights() -> WeightSeq:
    return degree_sequence(two_star_graph())
