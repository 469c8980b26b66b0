"""
InvariantReport: every graph invariant of G_N(R) in one JSON-ready record.
"""

from dataclasses import asdict, dataclass
from typing import List, Optional

from ..config.config_loader import get_exact_dominating_cap
from .census import StructureCensus, structure_census
from .coloring import sum_edge_coloring
from .dominating import dominating_set
from .nil_clean_graph import (
    INFINITE,
    NilCleanGraph,
    connected_components,
    diameter,
    girth,
    invariant_from_json,
    invariant_to_json,
    is_bipartite,
)


@dataclass
class DominatingSummary:
    vertices: List[int]
    labels: List[str]
    size: int
    exact: bool


@dataclass
class ColoringSummary:
    colors: List[int]
    color_count: int
    proper: bool
    max_degree: int
    class_one: bool
    edge_colors: Optional[List[List[int]]] = None


@dataclass
class InvariantReport:
    """Invariants of one nil clean graph.

    girth and diameter are ints or INFINITE. dominating is None when the
    dominating search was not requested.
    """

    ring: str
    order: int
    edge_count: int
    degrees: List[int]
    component_sizes: List[int]
    girth: object
    diameter: object
    bipartite: bool
    complete: bool
    dominating: Optional[DominatingSummary]
    coloring: ColoringSummary
    census: StructureCensus

    @property
    def component_count(self) -> int:
        return len(self.component_sizes)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def to_dict(self) -> dict:
        coloring = asdict(self.coloring)
        if coloring["edge_colors"] is None:
            del coloring["edge_colors"]
        return {
            "ring": self.ring,
            "order": self.order,
            "edge_count": self.edge_count,
            "degrees": list(self.degrees),
            "component_count": self.component_count,
            "component_sizes": list(self.component_sizes),
            "girth": invariant_to_json(self.girth),
            "diameter": invariant_to_json(self.diameter),
            "bipartite": self.bipartite,
            "complete": self.complete,
            "dominating": asdict(self.dominating) if self.dominating else None,
            "coloring": coloring,
            "census": self.census.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "InvariantReport":
        dominating = data.get("dominating")
        return cls(
            ring=data["ring"],
            order=data["order"],
            edge_count=data["edge_count"],
            degrees=list(data["degrees"]),
            component_sizes=list(data["component_sizes"]),
            girth=invariant_from_json(data["girth"]),
            diameter=invariant_from_json(data["diameter"]),
            bipartite=data["bipartite"],
            complete=data["complete"],
            dominating=DominatingSummary(**dominating) if dominating else None,
            coloring=ColoringSummary(**data["coloring"]),
            census=StructureCensus.from_dict(data["census"]),
        )


def compute_report(
    g: NilCleanGraph,
    with_dominating: bool = True,
    dominating_cap: int = None,
    include_edge_colors: bool = False,
) -> InvariantReport:
    """Compute every invariant of g.

    The dominating search falls back to a greedy bound (exact=False) when the
    graph is above *dominating_cap* or the search runs out of budget.
    """
    if dominating_cap is None:
        dominating_cap = get_exact_dominating_cap()
    coloring = sum_edge_coloring(g, include_edges=include_edge_colors)

    dominating = None
    if with_dominating:
        found = dominating_set(g, cap=dominating_cap)
        vertices = found.vertices.indices()
        dominating = DominatingSummary(
            vertices=vertices,
            labels=[g.ring.label(v) for v in vertices],
            size=found.size,
            exact=found.exact,
        )

    return InvariantReport(
        ring=g.ring.name,
        order=g.order,
        edge_count=g.edge_count,
        degrees=g.degrees(),
        component_sizes=[len(c) for c in connected_components(g)],
        girth=girth(g),
        diameter=diameter(g),
        bipartite=is_bipartite(g),
        complete=g.is_complete(),
        dominating=dominating,
        coloring=ColoringSummary(
            colors=coloring.colors.indices(),
            color_count=coloring.color_count,
            proper=coloring.proper,
            max_degree=coloring.max_degree,
            class_one=coloring.class_one,
            edge_colors=coloring.edge_colors,
        ),
        census=structure_census(g),
    )


def report_inconsistencies(report: InvariantReport) -> List[str]:
    """Relations any correct report satisfies; returns the ones that fail."""
    problems = []
    if report.bipartite and report.girth is not INFINITE and report.girth % 2:
        problems.append(f"bipartite but girth {report.girth} is odd")
    if report.complete and report.order > 1 and report.diameter != 1:
        problems.append(f"complete but diameter {report.diameter}")
    if (report.component_count > 1) != (report.diameter is INFINITE):
        problems.append("diameter finite iff connected fails")
    if report.coloring.color_count < report.coloring.max_degree:
        problems.append("fewer sum colours than the maximum degree")
    if sum(report.component_sizes) != report.order:
        problems.append("component sizes do not cover the vertices")
    if sum(report.degrees) != 2 * report.edge_count:
        problems.append("degree sum differs from twice the edge count")
    return problems
