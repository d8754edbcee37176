"""
Generator Factory

One validated parameter object per synthetic graph, dispatched to the
family's generator.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from generators.barabasi_albert import calibrate_m_per_node, generate_ba
from generators.erdos_renyi import edge_count_for_density, generate_er
from graph.graph import Graph
from observability.logger import get_logger
from sampling.rng import MAX_SEED

logger = get_logger(__name__)


class GraphFamily(str, Enum):
    ER_GNM = "er-gnm"
    ER_GNP = "er-gnp"
    BA = "ba"


class GeneratorSpec(BaseModel):
    """
    Family plus its size parameter

    er-gnm: density or edge_count
    er-gnp: density
    ba:     m_per_node, or edge_count as a calibration target
    """
    model_config = ConfigDict(frozen=True)

    family: GraphFamily
    n: int = Field(..., ge=1)
    seed: int = Field(..., ge=0, le=MAX_SEED)
    density: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    edge_count: Optional[int] = Field(default=None, ge=0)
    m_per_node: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_size_parameter(self) -> "GeneratorSpec":
        given = [
            name for name in ("density", "edge_count", "m_per_node")
            if getattr(self, name) is not None
        ]
        allowed = {
            GraphFamily.ER_GNM: {"density", "edge_count"},
            GraphFamily.ER_GNP: {"density"},
            GraphFamily.BA: {"m_per_node", "edge_count"},
        }[self.family]

        if len(given) != 1 or given[0] not in allowed:
            raise ValueError(
                f"{self.family.value} takes exactly one of {sorted(allowed)}, got {given}"
            )
        if self.family is GraphFamily.BA and self.n < 2:
            raise ValueError("ba needs n >= 2")
        if self.m_per_node is not None and self.m_per_node >= self.n:
            raise ValueError(f"m_per_node must be < n={self.n}")
        return self

    def resolved_m_per_node(self) -> int:
        """m_per_node for BA, calibrating from edge_count if needed"""
        if self.m_per_node is not None:
            return self.m_per_node
        return calibrate_m_per_node(self.n, self.edge_count)


def generate(spec: GeneratorSpec) -> Graph:
    """
    Build the graph a GeneratorSpec describes

    Args:
        spec: Validated generator parameters

    Returns:
        Generated graph

    Raises:
        ParameterError: Edge count out of range for the node count
    """
    if spec.family is GraphFamily.BA:
        graph = generate_ba(spec.n, spec.resolved_m_per_node(), spec.seed)
    else:
        graph = generate_er(
            spec.n,
            spec.seed,
            density=spec.density,
            m=spec.edge_count,
            exact_edges=spec.family is GraphFamily.ER_GNM,
        )

    logger.debug(
        "graph_generated",
        family=spec.family.value,
        n=graph.n,
        m=graph.m,
        density=round(graph.density(), 6),
    )
    return graph


def spec_for_density(family: GraphFamily, n: int, density: float, seed: int) -> GeneratorSpec:
    """
    GeneratorSpec hitting a density: exact m for er-gnm, p for er-gnp, calibrated
    m_per_node for ba
    """
    family = GraphFamily(family)
    if family is GraphFamily.ER_GNP:
        return GeneratorSpec(family=family, n=n, seed=seed, density=density)
    if family is GraphFamily.ER_GNM:
        return GeneratorSpec(
            family=family, n=n, seed=seed, edge_count=edge_count_for_density(n, density)
        )
    target = edge_count_for_density(n, density)
    return GeneratorSpec(
        family=family, n=n, seed=seed, m_per_node=calibrate_m_per_node(n, target)
    )
