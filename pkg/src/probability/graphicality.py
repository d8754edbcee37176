"""
Graphicality guard: is an integer degree sequence realisable by a simple graph?
"""

from typing import Sequence

import networkx as nx

from observability.logger import get_logger

logger = get_logger(__name__)


def is_graphical(weights: Sequence[float]) -> bool:
    """
    Erdős–Gallai test

    Args:
        weights: Degree sequence; entries must be integral

    Returns:
        True if some simple graph has exactly this degree sequence.
        Sequences with fractional entries are never graphical.
    """
    degrees = []
    for w in weights:
        if not float(w).is_integer():
            logger.debug("graphicality_fractional_weight", weight=w)
            return False
        degrees.append(int(w))

    return nx.is_valid_degree_sequence_erdos_gallai(degrees)
