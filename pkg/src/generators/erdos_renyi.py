"""
Erdős–Rényi Generators

- G(n, m): exactly m distinct edges drawn uniformly without replacement
- G(n, p): every pair independently with probability p, sampled by
  geometric skipping over the lower-triangle pair index (O(n + m))
"""

import math
from typing import List, Optional

import numpy as np

from errors import ParameterError
from graph.graph import Edge, Graph
from sampling.rng import generator_for


def max_edges(n: int) -> int:
    """n(n-1)/2, the edge count of K_n"""
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    return n * (n - 1) // 2


def edge_count_for_density(n: int, density: float) -> int:
    """Edge count nearest to density * n(n-1)/2 (halves round up)"""
    if not 0.0 <= density <= 1.0:
        raise ParameterError(f"density must lie in [0, 1], got {density}")
    return int(math.floor(density * max_edges(n) + 0.5))


def _decode_pairs(keys: np.ndarray) -> np.ndarray:
    """
    Map lower-triangle indices k to pairs (j, i) with j < i

    k enumerates (1, 0), (2, 0), (2, 1), (3, 0), ... so that
    k = i(i-1)/2 + j.
    """
    i = np.floor((1.0 + np.sqrt(1.0 + 8.0 * keys)) / 2.0).astype(np.int64)
    # float sqrt can land one off for large k
    i -= ((i * (i - 1) // 2) > keys).astype(np.int64)
    i += (((i + 1) * i // 2) <= keys).astype(np.int64)
    j = keys - i * (i - 1) // 2
    return np.column_stack((j, i))


def generate_er_gnm(n: int, m: int, seed: int) -> Graph:
    """
    Uniform random graph with exactly m edges

    Args:
        n: Node count
        m: Edge count, at most n(n-1)/2
        seed: Generator seed

    Returns:
        Graph with n nodes and m edges

    Raises:
        ParameterError: If n < 1 or m is out of range
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    total = max_edges(n)
    if not 0 <= m <= total:
        raise ParameterError(f"m={m} outside [0, {total}] for n={n}")
    if m == 0:
        return Graph.empty(n)

    rng = generator_for(seed)
    keys = rng.choice(total, size=m, replace=False).astype(np.int64)
    return Graph.from_index_edges(n, _decode_pairs(keys).tolist())


def generate_er_gnp(n: int, p: float, seed: int) -> Graph:
    """
    Binomial random graph: each pair independently with probability p

    Args:
        n: Node count
        p: Edge probability in [0, 1]
        seed: Generator seed

    Returns:
        Graph with n nodes

    Raises:
        ParameterError: If n < 1 or p is out of range
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"p must lie in [0, 1], got {p}")
    if p == 0.0:
        return Graph.empty(n)
    if p == 1.0:
        return Graph.from_index_edges(n, ((j, i) for i in range(n) for j in range(i)))

    rng = generator_for(seed)
    log_q = math.log1p(-p)
    edges: List[Edge] = []
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log(1.0 - rng.random()) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((w, v))
    return Graph.from_index_edges(n, edges)


def generate_er(
    n: int,
    seed: int,
    density: Optional[float] = None,
    m: Optional[int] = None,
    exact_edges: bool = True
) -> Graph:
    """
    Erdős–Rényi graph from a density or an exact edge count

    Args:
        n: Node count
        seed: Generator seed
        density: Target density in [0, 1]
        m: Exact edge count (G(n, m) only)
        exact_edges: True for G(n, m), False for G(n, p) with p = density

    Returns:
        Graph

    Raises:
        ParameterError: If neither or both of density and m are given,
            or m is combined with G(n, p)
    """
    if (density is None) == (m is None):
        raise ParameterError("give exactly one of density or m")
    if not exact_edges:
        if m is not None:
            raise ParameterError("G(n, p) takes a density, not an edge count")
        return generate_er_gnp(n, density, seed)
    if m is None:
        m = edge_count_for_density(n, density)
    return generate_er_gnm(n, m, seed)

