"""
Error Types

Every error raised on purpose by the library derives from RandomizerError.
The CLI maps all of them to exit code 2.
"""

from fractions import Fraction
from typing import Optional, Tuple


class RandomizerError(Exception):
    """Base class for library errors"""


class GraphInvariantError(RandomizerError, ValueError):
    """A Graph or WeightSeq would violate its invariants"""


class EdgeListParseError(RandomizerError, ValueError):
    """Malformed edge-list input"""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class EdgeListFormatError(RandomizerError, ValueError):
    """A graph cannot be written as a plain edge list"""


class DomainError(RandomizerError, ValueError):
    """Arguments outside the domain of a probability kernel"""


class NonGraphicalInputError(DomainError):
    """
    The combinatorial kernel produced a value outside [0, 1].

    This only happens for graphically impossible (n, m, w_i, w_j).
    """

    def __init__(
        self,
        n: float,
        m: float,
        w_i: float,
        w_j: float,
        raw: float,
        exact: Optional[Fraction] = None,
        pair: Optional[Tuple[int, int]] = None
    ):
        self.n = n
        self.m = m
        self.w_i = w_i
        self.w_j = w_j
        self.raw = raw
        self.exact = exact
        self.pair = pair

        value = f"{exact} ({raw:.6g})" if exact is not None else f"{raw:.6g}"
        where = f" at pair {pair}" if pair is not None else ""
        super().__init__(
            f"non-graphical input{where} (n={n}, m={m}, w_i={w_i}, w_j={w_j}): "
            f"raw ratio {value} is outside [0, 1]"
        )

    def at_pair(self, i: int, j: int) -> "NonGraphicalInputError":
        """Copy of this error that names the offending node pair"""
        return NonGraphicalInputError(
            self.n, self.m, self.w_i, self.w_j, self.raw, self.exact, (i, j)
        )


class UndefinedProbabilityError(DomainError):
    """No configuration exists with or without the focal edge"""


class MonotonicityViolationError(DomainError):
    """A landed candidate's probability exceeded the running cap"""

    def __init__(self, row: int, candidate: int, p: float, p_cap: float):
        self.row = row
        self.candidate = candidate
        self.p = p
        self.p_cap = p_cap
        super().__init__(
            f"edge probability is not monotone along row {row}: "
            f"p={p!r} at candidate {candidate} exceeds cap {p_cap!r}"
        )


class ParameterError(RandomizerError, ValueError):
    """Invalid generator or experiment parameters"""
