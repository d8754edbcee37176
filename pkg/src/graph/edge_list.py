"""
Edge-List I/O

Plain-text edge lists: one "label label" pair per line, single-label lines
declare isolated nodes, '#' starts a comment line, blank lines are ignored.
"""

from pathlib import Path
from typing import BinaryIO, Dict, List, Tuple, Union

from errors import EdgeListFormatError, EdgeListParseError
from graph.graph import Graph
from observability.logger import get_logger

logger = get_logger(__name__)


def read_edge_list(source: BinaryIO) -> Graph:
    """
    Parse a UTF-8 edge list

    Labels get indices in order of first appearance and duplicate edge
    lines collapse to one edge.

    Args:
        source: Binary stream

    Returns:
        Parsed graph

    Raises:
        EdgeListParseError: On a line with neither one nor two tokens,
            a self-loop, or undecodable bytes
    """
    index: Dict[str, int] = {}
    labels: List[str] = []
    edges: List[Tuple[int, int]] = []

    def node(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for line_number, raw in enumerate(source, start=1):
        try:
            line = raw.decode("utf-8").strip()
        except UnicodeDecodeError as e:
            raise EdgeListParseError(f"invalid UTF-8 ({e.reason})", line_number) from e

        if not line or line.startswith("#"):
            continue

        tokens = line.split()
        if len(tokens) == 1:
            node(tokens[0])
        elif len(tokens) == 2:
            if tokens[0] == tokens[1]:
                raise EdgeListParseError(f"self-loop on node {tokens[0]!r}", line_number)
            edges.append((node(tokens[0]), node(tokens[1])))
        else:
            raise EdgeListParseError(
                f"expected one or two labels, found {len(tokens)}", line_number
            )

    graph = Graph.from_edges(labels, edges)
    logger.debug("edge_list_read", nodes=graph.n, edges=graph.m, lines=len(edges))
    return graph


def write_edge_list(g: Graph, sink: BinaryIO) -> None:
    """
    Write one "label label" line per edge, then one line per isolated node

    Args:
        g: Graph to write
        sink: Binary stream

    Raises:
        EdgeListFormatError: If a label would not survive re-reading
    """
    for label in g.labels:
        if not label or label.startswith("#") or len(label.split()) != 1 or label.strip() != label:
            raise EdgeListFormatError(f"label {label!r} cannot be written to an edge list")

    lines = [f"{g.labels[i]} {g.labels[j]}\n" for i, j in g.edges]
    degrees = g.degrees()
    lines.extend(f"{label}\n" for label, d in zip(g.labels, degrees) if d == 0)
    sink.write("".join(lines).encode("utf-8"))


def load_edge_list(path: Union[str, Path]) -> Graph:
    """Read an edge-list file"""
    with open(path, "rb") as f:
        return read_edge_list(f)


def save_edge_list(g: Graph, path: Union[str, Path]) -> None:
    """Write an edge-list file"""
    with open(path, "wb") as f:
        write_edge_list(g, f)
