"""
Edge Probability Kernels

Chung-Lu probability min(1, w_i w_j / sum_k w_k) and the combinatorial
probability X / (X + Y) obtained by counting the edge configurations with
and without the focal edge.

All kernels are pure functions; the clamp counter belongs to the caller.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from errors import DomainError, NonGraphicalInputError
from graph.graph import WeightSeq


class ModelKind(str, Enum):
    CHUNG_LU = "chung-lu"
    COMBINATORIAL = "combinatorial"


class ProbabilityMode(str, Enum):
    STRICT = "strict"
    CLAMP = "clamp"


@dataclass
class ClampCounter:
    """Counts kernel values that clamp mode forced into [0, 1]"""
    count: int = 0

    def increment(self, by: int = 1) -> None:
        self.count += by


@dataclass(frozen=True)
class CombinatorialTerms:
    """
    Intermediate quantities of the combinatorial kernel.

    m_star = m - w_i - w_j + 1
    x      = w_i w_j (n^2 - 5n + 8 - 2 m_star)
    y      = 2 m_star (n - w_i - 1)(n - w_j - 1)
    p      = x / (x + y), the raw ratio (may lie outside [0, 1])
    """
    m_star: float
    x: float
    y: float
    p: float
    out_of_range: bool

    def as_fraction(self) -> Optional[Fraction]:
        """Exact x / (x + y) when x and y are integral, else None"""
        if not all(float(v).is_integer() for v in (self.x, self.y)):
            return None
        x, y = int(self.x), int(self.y)
        if x == 0:
            return Fraction(0)
        if x + y == 0:
            return None
        return Fraction(x, x + y)


def combinatorial_terms(n: float, m: float, w_i: float, w_j: float) -> CombinatorialTerms:
    """
    Compute M*, X, Y and the raw ratio for one node pair

    Integer arguments keep x and y exact (Python ints). A zero weight gives
    p = 0 regardless of y.

    Args:
        n: Node count (>= 2)
        m: Edge count, possibly fractional
        w_i: Expected degree of node i
        w_j: Expected degree of node j

    Returns:
        CombinatorialTerms with out_of_range set when x < 0, y < 0 or
        the ratio leaves [0, 1]

    Raises:
        DomainError: If n < 2 or any of m, w_i, w_j is negative
    """
    if n < 2:
        raise DomainError(f"pair probabilities need n >= 2, got n={n}")
    if m < 0 or w_i < 0 or w_j < 0:
        raise DomainError(f"m, w_i and w_j must be >= 0 (m={m}, w_i={w_i}, w_j={w_j})")

    m_star = m - w_i - w_j + 1
    x = w_i * w_j * (n * n - 5 * n + 8 - 2 * m_star)
    y = 2 * m_star * (n - w_i - 1) * (n - w_j - 1)

    if x == 0:
        return CombinatorialTerms(m_star, x, y, 0.0, False)

    denominator = x + y
    if denominator == 0:
        return CombinatorialTerms(m_star, x, y, math.nan, True)

    p = x / denominator
    out_of_range = x < 0 or y < 0 or not 0.0 <= p <= 1.0
    return CombinatorialTerms(m_star, x, y, p, out_of_range)


def _clamped(terms: CombinatorialTerms) -> float:
    if math.isnan(terms.p):
        return 1.0 if terms.x > 0 else 0.0
    return min(1.0, max(0.0, terms.p))


def combinatorial_p(
    n: float,
    m: float,
    w_i: float,
    w_j: float,
    mode: ProbabilityMode = ProbabilityMode.STRICT,
    counter: Optional[ClampCounter] = None
) -> float:
    """
    Combinatorial edge probability X / (X + Y)

    Args:
        n: Node count
        m: Edge count
        w_i: Expected degree of node i
        w_j: Expected degree of node j
        mode: STRICT raises on out-of-range values, CLAMP clips them
        counter: Incremented for every clipped value in CLAMP mode

    Returns:
        Probability in [0, 1]

    Raises:
        NonGraphicalInputError: STRICT mode and the raw ratio is out of range
    """
    terms = combinatorial_terms(n, m, w_i, w_j)
    if not terms.out_of_range:
        return terms.p

    if ProbabilityMode(mode) is ProbabilityMode.STRICT:
        raise NonGraphicalInputError(n, m, w_i, w_j, terms.p, terms.as_fraction())

    if counter is not None:
        counter.increment()
    return _clamped(terms)


@dataclass(frozen=True)
class EdgeProbabilityModel:
    """Kernel selector together with the graph-level parameters it needs"""
    kind: ModelKind
    n: int
    m: float
    total_weight: float

    def __post_init__(self):
        object.__setattr__(self, "kind", ModelKind(self.kind))
        if self.total_weight < 0:
            raise DomainError(f"total weight must be >= 0, got {self.total_weight}")
        if abs(self.m - self.total_weight / 2) > 1e-9 * self.total_weight:
            raise DomainError(
                f"m={self.m} is inconsistent with total weight {self.total_weight}"
            )

    @classmethod
    def from_weights(cls, kind: ModelKind, weights: WeightSeq) -> "EdgeProbabilityModel":
        """Model for a weight sequence; m is half the total weight"""
        total = weights.total
        return cls(ModelKind(kind), weights.n, total / 2, total)

    @classmethod
    def from_counts(cls, kind: ModelKind, n: int, m: float) -> "EdgeProbabilityModel":
        """Model for explicit node and edge counts"""
        return cls(ModelKind(kind), n, m, 2 * m)

    def probability(
        self,
        w_i: float,
        w_j: float,
        mode: ProbabilityMode = ProbabilityMode.STRICT,
        counter: Optional[ClampCounter] = None
    ) -> float:
        """Edge probability of one pair under this model"""
        if self.kind is ModelKind.CHUNG_LU:
            return chung_lu_p(self, w_i, w_j)
        return combinatorial_p(self.n, self.m, w_i, w_j, mode, counter)

    def pair_function(
        self,
        mode: ProbabilityMode,
        counter: Optional[ClampCounter] = None
    ) -> Callable[[float, float], float]:
        """Two-argument kernel for the sampler hot loop"""
        if self.kind is ModelKind.CHUNG_LU:
            return lambda w_i, w_j: chung_lu_p(self, w_i, w_j)
        n, m = self.n, self.m
        return lambda w_i, w_j: combinatorial_p(n, m, w_i, w_j, mode, counter)

    def row_probabilities(
        self,
        w_i: float,
        w_js: np.ndarray,
        mode: ProbabilityMode = ProbabilityMode.CLAMP,
        counter: Optional[ClampCounter] = None
    ) -> np.ndarray:
        """
        Vectorised probabilities between one node and many partners

        Args:
            w_i: Weight of the fixed node
            w_js: Partner weights
            mode: Range handling, as for combinatorial_p
            counter: Clamp counter for CLAMP mode

        Returns:
            Array of probabilities, same shape as w_js

        Raises:
            NonGraphicalInputError: STRICT mode with an out-of-range entry
                (reports the first one)
        """
        w_js = np.asarray(w_js, dtype=np.float64)
        if self.kind is ModelKind.CHUNG_LU:
            if self.total_weight == 0:
                if w_i > 0 and np.any(w_js > 0):
                    raise DomainError("Chung-Lu probability undefined for zero total weight")
                return np.zeros_like(w_js)
            return np.minimum(1.0, w_i * w_js / self.total_weight)

        n = float(self.n)
        if n < 2:
            raise DomainError(f"pair probabilities need n >= 2, got n={self.n}")
        m_star = self.m - w_i - w_js + 1
        x = w_i * w_js * (n * n - 5 * n + 8 - 2 * m_star)
        y = 2 * m_star * (n - w_i - 1) * (n - w_js - 1)
        denominator = x + y

        with np.errstate(divide="ignore", invalid="ignore"):
            p = np.where(x == 0, 0.0, x / denominator)
        bad = (x != 0) & ((x < 0) | (y < 0) | (denominator == 0) | ~((p >= 0) & (p <= 1)))

        if not bad.any():
            return p

        if ProbabilityMode(mode) is ProbabilityMode.STRICT:
            first = int(np.argmax(bad))
            w_j = float(w_js[first])
            terms = combinatorial_terms(self.n, self.m, w_i, w_j)
            raise NonGraphicalInputError(self.n, self.m, w_i, w_j, terms.p, terms.as_fraction())

        if counter is not None:
            counter.increment(int(bad.sum()))
        clipped = np.where(np.isnan(p), np.where(x > 0, 1.0, 0.0), p)
        return np.where(bad, np.clip(clipped, 0.0, 1.0), p)


def chung_lu_p(model: EdgeProbabilityModel, w_i: float, w_j: float) -> float:
    """
    Chung-Lu edge probability min(1, w_i w_j / total_weight)

    Raises:
        DomainError: If the total weight is zero but w_i w_j is positive
    """
    if w_i < 0 or w_j < 0:
        raise DomainError(f"weights must be >= 0 (w_i={w_i}, w_j={w_j})")
    product = w_i * w_j
    if product == 0:
        return 0.0
    if model.total_weight == 0:
        raise DomainError("Chung-Lu probability undefined for zero total weight")
    return min(1.0, product / model.total_weight)
