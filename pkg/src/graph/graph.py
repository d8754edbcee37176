"""
Graph Core

Immutable simple undirected graphs and expected degree sequences.

Nodes are dense 0-based indices; the original labels ride along so that
real datasets never need renumbering.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from errors import GraphInvariantError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph.

    Edges are stored once as (i, j) with i < j, sorted lexicographically.
    Use from_edges() to build a graph from unnormalised pairs.
    """
    labels: Tuple[str, ...]
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise GraphInvariantError("node labels must be unique")

        if not self.edges:
            return

        pairs = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        if pairs.min() < 0 or pairs.max() >= self.n:
            raise GraphInvariantError(f"edge endpoint outside [0, {self.n})")
        if np.any(pairs[:, 0] == pairs[:, 1]):
            raise GraphInvariantError("self-loops are not allowed")
        if np.any(pairs[:, 0] > pairs[:, 1]):
            raise GraphInvariantError("edges must be stored as (i, j) with i < j")

        keys = pairs[:, 0] * self.n + pairs[:, 1]
        if np.any(np.diff(keys) <= 0):
            raise GraphInvariantError("edges must be sorted and free of duplicates")

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[Edge]) -> "Graph":
        """
        Build a graph from arbitrary index pairs

        Args:
            labels: Node labels, one per node
            edges: Index pairs in any orientation; duplicates collapse

        Returns:
            Graph with normalised edge storage

        Raises:
            GraphInvariantError: On self-loops or out-of-range endpoints
        """
        labels = tuple(str(label) for label in labels)
        pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if len(pairs) == 0:
            return cls(labels, ())

        if np.any(pairs[:, 0] == pairs[:, 1]):
            raise GraphInvariantError("self-loops are not allowed")

        n = len(labels)
        low = np.minimum(pairs[:, 0], pairs[:, 1])
        high = np.maximum(pairs[:, 0], pairs[:, 1])
        if low.min() < 0 or high.max() >= n:
            raise GraphInvariantError(f"edge endpoint outside [0, {n})")

        keys = np.unique(low * n + high)
        normalised = np.column_stack((keys // n, keys % n))
        return cls(labels, tuple(map(tuple, normalised.tolist())))

    @classmethod
    def from_index_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph whose labels are the decimal node indices"""
        return cls.from_edges([str(i) for i in range(n)], edges)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Graph with n isolated nodes"""
        return cls(tuple(str(i) for i in range(n)), ())

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted neighbour indices per node, built on first access"""
        neighbours = [[] for _ in range(self.n)]
        for i, j in self.edges:
            neighbours[i].append(j)
            neighbours[j].append(i)
        return tuple(tuple(sorted(nbrs)) for nbrs in neighbours)

    @cached_property
    def _edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self._edge_set

    def degrees(self) -> np.ndarray:
        """Number of incident edges per node"""
        if not self.edges:
            return np.zeros(self.n, dtype=np.int64)
        return np.bincount(np.asarray(self.edges).ravel(), minlength=self.n)

    def density(self) -> float:
        """m / (n(n-1)/2); zero for graphs with fewer than two nodes"""
        possible = self.n * (self.n - 1) // 2
        return self.m / possible if possible else 0.0

    def with_labels(self, labels: Sequence[str]) -> "Graph":
        """Same edges under new node labels"""
        if len(labels) != self.n:
            raise GraphInvariantError(f"expected {self.n} labels, got {len(labels)}")
        return Graph(tuple(str(label) for label in labels), self.edges)

    def labeled_edges(self) -> FrozenSet[FrozenSet[str]]:
        """Edge set expressed with labels, independent of index order"""
        return frozenset(
            frozenset((self.labels[i], self.labels[j])) for i, j in self.edges
        )

    def to_networkx(self) -> nx.Graph:
        """networkx copy keyed by label"""
        g = nx.Graph()
        g.add_nodes_from(self.labels)
        g.add_edges_from((self.labels[i], self.labels[j]) for i, j in self.edges)
        return g


@dataclass(frozen=True)
class WeightSeq:
    """Expected degree sequence w_1..w_N, the sampler's input"""
    weights: Tuple[float, ...]

    def __post_init__(self):
        for i, w in enumerate(self.weights):
            if not math.isfinite(w) or w < 0:
                raise GraphInvariantError(f"weight {i} must be finite and >= 0, got {w!r}")

    @classmethod
    def of(cls, weights: Iterable[float]) -> "WeightSeq":
        return cls(tuple(float(w) for w in weights))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> float:
        """Sum of weights, recomputed on every access"""
        return math.fsum(self.weights)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=np.float64)

    def is_integral(self) -> bool:
        return all(float(w).is_integer() for w in self.weights)

    def as_integers(self) -> Optional[Tuple[int, ...]]:
        """Integer weights, or None if any weight is fractional"""
        if not self.is_integral():
            return None
        return tuple(int(w) for w in self.weights)


def degree_sequence(g: Graph) -> WeightSeq:
    """
    Realised degree of every node, in node-index order

    Args:
        g: Input graph

    Returns:
        WeightSeq whose total equals 2 * g.m
    """
    return WeightSeq.of(g.degrees().tolist())
