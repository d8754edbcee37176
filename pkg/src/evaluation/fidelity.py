"""
Degree Fidelity Evaluation

Scores how closely each kernel's randomized graphs reproduce the given
degrees in a TrialReport:
- error on the maximum-degree node
- mean absolute error over the top-k nodes
- mean absolute error over all nodes
- mean signed bias (negative means degrees are under-reproduced)
"""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from errors import ParameterError
from experiments.reports import TrialReport
from observability.logger import get_logger
from probability.kernels import ModelKind

logger = get_logger(__name__)


@dataclass(frozen=True)
class FidelityResult:
    """Fidelity scores of one kernel"""
    model: ModelKind
    max_degree_node: str
    max_degree_error: float
    top_k: int
    top_k_mae: float
    mae: float
    bias: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "model": self.model.value,
            "max_degree_node": self.max_degree_node,
            "max_degree_error": round(self.max_degree_error, 6),
            "top_k": self.top_k,
            "top_k_mae": round(self.top_k_mae, 6),
            "mae": round(self.mae, 6),
            "bias": round(self.bias, 6),
        }


def _score(report: TrialReport, model: ModelKind, means: np.ndarray, top_k: int) -> FidelityResult:
    original = np.asarray(report.original_degree, dtype=float)
    error = np.asarray(means, dtype=float) - original
    k = min(top_k, len(report))
    return FidelityResult(
        model=model,
        max_degree_node=report.nodes[0],
        max_degree_error=float(abs(error[0])),
        top_k=k,
        top_k_mae=float(np.abs(error[:k]).mean()),
        mae=float(np.abs(error).mean()),
        bias=float(error.mean()),
    )


def evaluate_report(report: TrialReport, top_k: int = 5) -> Dict[ModelKind, FidelityResult]:
    """
    Fidelity of both kernels in a report

    Args:
        report: Output of run_compare (rows already degree-sorted)
        top_k: Number of highest-degree nodes in the top-k error

    Returns:
        FidelityResult per kernel
    """
    if len(report) == 0:
        raise ParameterError("cannot evaluate an empty report")
    if top_k < 1:
        raise ParameterError(f"top_k must be >= 1, got {top_k}")

    results = {
        ModelKind.CHUNG_LU: _score(report, ModelKind.CHUNG_LU, report.mean_degree_cl, top_k),
        ModelKind.COMBINATORIAL: _score(
            report, ModelKind.COMBINATORIAL, report.mean_degree_comb, top_k
        ),
    }
    for result in results.values():
        logger.info("fidelity", **result.to_dict())
    return results
