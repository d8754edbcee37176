"""
Barabási–Albert Generator

Preferential attachment by the repeated-nodes method: every edge endpoint
is appended to a list, and uniform draws from that list pick targets with
probability proportional to current degree.

Conventions:
- the seed graph is a clique on the first m_per_node nodes
- duplicate targets are rejected and redrawn
- m = m_per_node (n - m_per_node) + C(m_per_node, 2)
"""

from typing import List, Set

import numpy as np

from errors import ParameterError
from graph.graph import Edge, Graph
from observability.logger import get_logger
from sampling.rng import generator_for

logger = get_logger(__name__)


def _check(n: int, m_per_node: int) -> None:
    if n < 2:
        raise ParameterError(f"n must be >= 2, got {n}")
    if not 1 <= m_per_node < n:
        raise ParameterError(f"m_per_node must lie in [1, {n - 1}], got {m_per_node}")


def ba_edge_count(n: int, m_per_node: int) -> int:
    """Edge count produced by generate_ba(n, m_per_node, ...)"""
    _check(n, m_per_node)
    return m_per_node * (n - m_per_node) + m_per_node * (m_per_node - 1) // 2


def calibrate_m_per_node(n: int, target_edges: int) -> int:
    """
    m_per_node whose edge count is closest to a target

    Args:
        n: Node count
        target_edges: Requested edge count

    Returns:
        m_per_node in [1, n - 1]; ties go to the smaller value
    """
    if n < 2:
        raise ParameterError(f"n must be >= 2, got {n}")
    if target_edges < 0:
        raise ParameterError(f"target_edges must be >= 0, got {target_edges}")

    candidates = np.arange(1, n, dtype=np.int64)
    counts = candidates * (n - candidates) + candidates * (candidates - 1) // 2
    best = int(candidates[np.argmin(np.abs(counts - target_edges))])

    logger.debug(
        "ba_calibrated",
        n=n,
        target_edges=target_edges,
        m_per_node=best,
        edges=ba_edge_count(n, best),
    )
    return best


def generate_ba(n: int, m_per_node: int, seed: int) -> Graph:
    """
    Barabási–Albert graph

    Args:
        n: Node count
        m_per_node: Edges each arriving node attaches, in [1, n - 1]
        seed: Generator seed

    Returns:
        Graph with ba_edge_count(n, m_per_node) edges

    Raises:
        ParameterError: If m_per_node is out of range
    """
    _check(n, m_per_node)
    rng = generator_for(seed)

    edges: List[Edge] = [
        (i, j) for j in range(m_per_node) for i in range(j)
    ]
    repeated: List[int] = [node for edge in edges for node in edge]

    for source in range(m_per_node, n):
        targets: Set[int] = set()
        while len(targets) < m_per_node:
            need = m_per_node - len(targets)
            if repeated:
                picks = rng.integers(0, len(repeated), size=need)
                targets.update(repeated[k] for k in picks.tolist())
            else:
                targets.update(rng.choice(source, size=need, replace=False).tolist())

        for target in sorted(targets):
            edges.append((target, source))
            repeated.append(target)
        repeated.extend([source] * m_per_node)

    return Graph.from_index_edges(n, edges)
