"""
Experiment Reports

Per-node degree fidelity (TrialReport) and density sweep records
(SweepRow), converted to pandas frames for CSV output.
"""

import sys
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence, TextIO

import numpy as np
import pandas as pd

from config.randomizer_config import get_config
from probability.kernels import ModelKind

TRIAL_COLUMNS = [
    "node",
    "original_degree",
    "mean_degree_cl",
    "mean_degree_comb",
    "std_degree_cl",
    "std_degree_comb",
    "trials",
]

SWEEP_COLUMNS = [
    "family",
    "n",
    "density",
    "trials",
    "mean_abs_diff_cl",
    "mean_abs_diff_comb",
    "signed_diff_cl",
    "signed_diff_comb",
    "std_cl",
    "std_comb",
]


@dataclass(frozen=True)
class TrialReport:
    """
    Realised degree statistics per node over repeated randomizations.

    Rows are ordered by nonincreasing original degree, ties by node index.
    """
    nodes: Sequence[str]
    original_degree: np.ndarray
    mean_degree_cl: np.ndarray
    mean_degree_comb: np.ndarray
    std_degree_cl: np.ndarray
    std_degree_comb: np.ndarray
    trials: int

    def __len__(self) -> int:
        return len(self.nodes)

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({
            "node": list(self.nodes),
            "original_degree": self.original_degree,
            "mean_degree_cl": self.mean_degree_cl,
            "mean_degree_comb": self.mean_degree_comb,
            "std_degree_cl": self.std_degree_cl,
            "std_degree_comb": self.std_degree_comb,
            "trials": self.trials,
        })
        return frame[TRIAL_COLUMNS]


@dataclass(frozen=True)
class SweepRow:
    """Given-vs-randomized average degree difference at one density"""
    family: str
    n: int
    density: float
    trials: int
    mean_abs_diff_cl: float
    mean_abs_diff_comb: float
    signed_diff_cl: float
    signed_diff_comb: float
    std_cl: float
    std_comb: float


def sweep_frame(rows: List[SweepRow]) -> pd.DataFrame:
    """One CSV row per density"""
    return pd.DataFrame([asdict(row) for row in rows], columns=SWEEP_COLUMNS)


MODEL_SUFFIXES = {ModelKind.CHUNG_LU: "_cl", ModelKind.COMBINATORIAL: "_comb"}


def select_models(frame: pd.DataFrame, models: Sequence[ModelKind]) -> pd.DataFrame:
    """Drop the columns of kernels not in models"""
    dropped = tuple(suffix for kind, suffix in MODEL_SUFFIXES.items() if kind not in models)
    return frame[[column for column in frame.columns if not column.endswith(dropped)]] if dropped else frame


def write_csv(frame: pd.DataFrame, output: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """
    Write a report frame as UTF-8 CSV with "\\n" line endings

    Args:
        frame: Report frame
        output: File path; stdout (or stream) when None
        stream: Text stream used when no path is given
    """
    float_format = get_config().output.float_format
    if output is None:
        frame.to_csv(
            stream if stream is not None else sys.stdout, index=False, float_format=float_format, lineterminator="\n"
        )
        return
    frame.to_csv(
        output, index=False, float_format=float_format, lineterminator="\n", encoding="utf-8"
    )
