from functools import cached_property
from typing import List

from ..graph.census import StructureCensus, structure_census
from ..graph.coloring import ColoringCertificate, sum_edge_coloring
from ..graph.nil_clean_graph import (
    NilCleanGraph,
    build_graph,
    connected_components,
    diameter,
    girth,
    is_bipartite,
)
from ..nil_clean import NilCleanProfile, doubles_all_nil_clean, nilclean_profile
from ..rings.builder import build_ring, characteristic, field_parameters
from ..rings.finite_ring import FiniteRing
from ..rings.ring_spec import parse_spec


class RingContext:
    """Everything the theorem cases ask about one ring, computed on first use.

    Cases share one context per ring, so the graph and its invariants are
    built once however many cases look at them.
    """

    def __init__(self, spec: str):
        self.spec = parse_spec(spec)

    @cached_property
    def ring(self) -> FiniteRing:
        return build_ring(self.spec)

    @property
    def name(self) -> str:
        return self.ring.name

    @cached_property
    def profile(self) -> NilCleanProfile:
        return nilclean_profile(self.ring)

    @cached_property
    def graph(self) -> NilCleanGraph:
        return build_graph(self.ring, self.profile.nilclean)

    @cached_property
    def components(self) -> List[List[int]]:
        return connected_components(self.graph)

    @cached_property
    def girth(self):
        return girth(self.graph)

    @cached_property
    def diameter(self):
        return diameter(self.graph)

    @cached_property
    def bipartite(self) -> bool:
        return is_bipartite(self.graph)

    @cached_property
    def census(self) -> StructureCensus:
        return structure_census(self.graph)

    @cached_property
    def coloring(self) -> ColoringCertificate:
        return sum_edge_coloring(self.graph)

    @cached_property
    def characteristic(self) -> int:
        return characteristic(self.ring)

    @cached_property
    def field_parameters(self):
        return field_parameters(self.ring)

    @cached_property
    def doubles_nil_clean(self) -> bool:
        return doubles_all_nil_clean(self.ring, self.profile.nilclean)

    def labels(self, vertices) -> tuple:
        return tuple(self.ring.label(v) for v in vertices)
