"""
Bundled datasets shipped in the repository's data directory.
"""

from pathlib import Path

from graph.edge_list import load_edge_list
from graph.graph import Graph

DATA_DIR = Path(__file__).resolve().parents[2] / "data"
KARATE_CLUB_PATH = DATA_DIR / "karate.txt"


def load_karate_club() -> Graph:
    """Zachary's Karate Club: 34 nodes, 78 edges, labels "1".."34" """
    return load_edge_list(KARATE_CLUB_PATH)
