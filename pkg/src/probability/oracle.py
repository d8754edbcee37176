"""
Exact Edge Probability Oracle

Counts the configurations with (C_c) and without (C_d) the focal edge as
products of three binomials each, using arbitrary-precision integers.
Slow but exact; it is the reference the closed form is checked against.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral
from typing import Tuple

from errors import DomainError, UndefinedProbabilityError


@dataclass(frozen=True)
class BinomialCounts:
    c_connected: int
    c_disconnected: int

    @property
    def total(self) -> int:
        return self.c_connected + self.c_disconnected


def binomial(a: int, b: int) -> int:
    """C(a, b), defined as 0 when b < 0, a < 0 or b > a"""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _as_int(name: str, value) -> int:
    if isinstance(value, Integral):
        return int(value)
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise DomainError(f"{name} must be an integer for the exact oracle, got {value!r}")


def configuration_counts(n: int, m: int, w_i: int, w_j: int) -> BinomialCounts:
    """
    C_c and C_d for one node pair

    Args:
        n: Node count
        m: Edge count
        w_i: Degree of node i
        w_j: Degree of node j

    Returns:
        BinomialCounts
    """
    rest = n - 2
    rest_pairs = binomial(rest, 2)
    connected = (
        binomial(rest, w_i - 1)
        * binomial(rest, w_j - 1)
        * binomial(rest_pairs, m - w_i - w_j + 1)
    )
    disconnected = (
        binomial(rest, w_i)
        * binomial(rest, w_j)
        * binomial(rest_pairs, m - w_i - w_j)
    )
    return BinomialCounts(connected, disconnected)


def oracle_p(n: int, m: int, w_i: int, w_j: int) -> Tuple[Fraction, BinomialCounts]:
    """
    Exact probability C_c / (C_c + C_d)

    Args:
        n: Node count (>= 2)
        m: Edge count (>= 0)
        w_i: Degree of node i, in [0, n - 1]
        w_j: Degree of node j, in [0, n - 1]

    Returns:
        (probability as a Fraction, the underlying counts)

    Raises:
        DomainError: Non-integer or out-of-range arguments
        UndefinedProbabilityError: No configuration exists at all
    """
    n = _as_int("n", n)
    m = _as_int("m", m)
    w_i = _as_int("w_i", w_i)
    w_j = _as_int("w_j", w_j)

    if n < 2:
        raise DomainError(f"pair probabilities need n >= 2, got n={n}")
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    for name, w in (("w_i", w_i), ("w_j", w_j)):
        if not 0 <= w <= n - 1:
            raise DomainError(f"{name}={w} outside [0, {n - 1}]")

    counts = configuration_counts(n, m, w_i, w_j)
    if counts.total == 0:
        raise UndefinedProbabilityError(
            f"no configuration exists for (n={n}, m={m}, w_i={w_i}, w_j={w_j})"
        )
    return Fraction(counts.c_connected, counts.total), counts
