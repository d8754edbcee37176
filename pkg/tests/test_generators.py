"""
Tests for the synthetic graph generators
"""

import networkx as nx
import numpy as np
import pytest
from pydantic import ValidationError

from errors import ParameterError
from generators.barabasi_albert import ba_edge_count, calibrate_m_per_node, generate_ba
from generators.erdos_renyi import (
    edge_count_for_density,
    generate_er,
    generate_er_gnm,
    generate_er_gnp,
    max_edges,
)
from generators.factory import GeneratorSpec, GraphFamily, generate, spec_for_density


class TestErdosRenyi:
    """Test G(n, m) and G(n, p)"""

    def test_complete(self):
        """m = n(n-1)/2 is K_n"""
        g = generate_er_gnm(5, 10, seed=1)

        assert g.m == 10
        assert g.degrees().tolist() == [4] * 5

    def test_density_to_edge_count(self):
        """Density maps to the nearest edge count"""
        assert max_edges(1000) == 499500
        assert edge_count_for_density(1000, 0.5) == 249750
        assert edge_count_for_density(10, 0.0) == 0
        assert edge_count_for_density(10, 1.0) == 45

    @pytest.mark.parametrize("n,m", [(2, 1), (30, 0), (30, 17), (200, 9950), (300, 44850)])
    def test_exact_edge_count(self, n, m):
        """G(n, m) hits m exactly"""
        g = generate_er_gnm(n, m, seed=n + m)

        assert g.n == n
        assert g.m == m

    def test_too_many_edges(self):
        """m above n(n-1)/2 is rejected"""
        with pytest.raises(ParameterError):
            generate_er_gnm(5, 11, seed=1)
        with pytest.raises(ParameterError):
            generate_er(5, seed=1, m=11)

    def test_empty_by_density(self):
        """Density 0 gives no edges"""
        assert generate_er(100, seed=1, density=0.0).m == 0
        assert generate_er_gnp(100, 0.0, seed=1).m == 0

    def test_gnp_extremes(self):
        """p = 1 is complete"""
        assert generate_er_gnp(7, 1.0, seed=1).m == 21

    def test_gnp_edge_count(self):
        """G(n, p) edge count within 5 sigma of its mean"""
        n, p = 1000, 0.02
        g = generate_er_gnp(n, p, seed=8)
        total = max_edges(n)

        assert abs(g.m - p * total) <= 5 * np.sqrt(total * p * (1 - p))

    def test_gnm_uniform_pairs(self):
        """Every pair shows up in G(n, m) about m / C(n, 2) of the time"""
        n, m, trials = 6, 5, 3000
        counts = np.zeros((n, n))
        for t in range(trials):
            for i, j in generate_er_gnm(n, m, seed=t).edges:
                counts[i, j] += 1

        expected = trials * m / max_edges(n)
        upper = counts[np.triu_indices(n, k=1)]
        assert np.all(np.abs(upper - expected) <= 5 * np.sqrt(expected))

    def test_deterministic(self):
        """Same seed, same graph"""
        assert generate_er_gnm(50, 100, seed=4).edges == generate_er_gnm(50, 100, seed=4).edges
        assert generate_er_gnp(50, 0.1, seed=4).edges == generate_er_gnp(50, 0.1, seed=4).edges

    def test_argument_checks(self):
        """Exactly one size parameter, and G(n, p) takes a density"""
        with pytest.raises(ParameterError):
            generate_er(10, seed=1)
        with pytest.raises(ParameterError):
            generate_er(10, seed=1, density=0.5, m=3)
        with pytest.raises(ParameterError):
            generate_er(10, seed=1, m=3, exact_edges=False)
        with pytest.raises(ParameterError):
            generate_er_gnp(10, 1.5, seed=1)
        with pytest.raises(ParameterError):
            edge_count_for_density(10, -0.1)


class TestBarabasiAlbert:
    """Test preferential attachment"""

    def test_edge_count_formula(self):
        """m_per_node (n - m_per_node) + C(m_per_node, 2)"""
        assert ba_edge_count(300, 100) == 24950
        assert ba_edge_count(5, 4) == 10
        assert ba_edge_count(10, 1) == 9

    @pytest.mark.parametrize("n,m_per_node", [(5, 4), (10, 1), (50, 3), (300, 77)])
    def test_generated_edge_count(self, n, m_per_node):
        """Generated graphs match the formula"""
        g = generate_ba(n, m_per_node, seed=2)

        assert g.n == n
        assert g.m == ba_edge_count(n, m_per_node)

    def test_complete_when_dense(self):
        """m_per_node = n - 1 gives K_n"""
        assert generate_ba(5, 4, seed=1).degrees().tolist() == [4] * 5

    def test_tree(self):
        """m_per_node = 1 gives a tree"""
        g = generate_ba(10, 1, seed=6)

        assert g.m == 9
        assert nx.is_tree(g.to_networkx())

    def test_heterogeneous_degrees(self):
        """Hubs emerge"""
        degrees = generate_ba(500, 5, seed=10).degrees()

        assert degrees.max() >= 2 * np.median(degrees)

    @pytest.mark.parametrize("m_per_node", [0, 10])
    def test_out_of_range(self, m_per_node):
        """1 <= m_per_node < n"""
        with pytest.raises(ParameterError):
            generate_ba(10, m_per_node, seed=1)

    def test_calibration_hits_target(self):
        """300 nodes, about 20000 edges"""
        m_per_node = calibrate_m_per_node(300, 20000)
        edges = ba_edge_count(300, m_per_node)

        assert m_per_node == 77
        assert abs(edges - 20000) <= 0.05 * 20000
        assert edges / max_edges(300) == pytest.approx(0.446, abs=0.01)

    def test_calibration_bounds(self):
        """Tiny and huge targets clamp to the valid range"""
        assert calibrate_m_per_node(10, 0) == 1
        assert calibrate_m_per_node(10, 10 ** 6) == 9


class TestFactory:
    """Test GeneratorSpec and dispatch"""

    def test_er_from_density(self):
        """er-gnm with a density has the exact edge count"""
        g = generate(GeneratorSpec(family="er-gnm", n=100, seed=1, density=0.3))

        assert g.m == edge_count_for_density(100, 0.3)

    def test_ba_from_target(self):
        """ba with edge_count calibrates m_per_node"""
        spec = GeneratorSpec(family=GraphFamily.BA, n=300, seed=1, edge_count=20000)

        assert spec.resolved_m_per_node() == 77
        assert generate(spec).m == ba_edge_count(300, 77)

    def test_gnp(self):
        """er-gnp dispatches to the binomial model"""
        g = generate(GeneratorSpec(family="er-gnp", n=20, seed=1, density=1.0))

        assert g.m == 190

    @pytest.mark.parametrize("kwargs", [
        dict(family="er-gnm", n=10, seed=1),
        dict(family="er-gnm", n=10, seed=1, density=0.5, edge_count=3),
        dict(family="er-gnp", n=10, seed=1, edge_count=3),
        dict(family="ba", n=10, seed=1, density=0.5),
        dict(family="ba", n=10, seed=1, m_per_node=10),
        dict(family="er-gnm", n=10, seed=1, density=1.5),
        dict(family="er-gnm", n=10, seed=-1, density=0.5),
        dict(family="ws", n=10, seed=1, density=0.5),
    ])
    def test_invalid_specs(self, kwargs):
        """Bad parameter combinations fail validation"""
        with pytest.raises(ValidationError):
            GeneratorSpec(**kwargs)

    def test_edge_count_out_of_range(self):
        """Validated specs can still ask for too many edges"""
        with pytest.raises(ParameterError):
            generate(GeneratorSpec(family="er-gnm", n=5, seed=1, edge_count=11))

    @pytest.mark.parametrize("family", list(GraphFamily))
    @pytest.mark.parametrize("density", [0.1, 0.5, 0.9])
    def test_spec_for_density(self, family, density):
        """Each family lands near the requested density"""
        g = generate(spec_for_density(family, 200, density, seed=3))

        assert g.density() == pytest.approx(density, abs=0.03)
