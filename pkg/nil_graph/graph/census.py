from dataclasses import dataclass, field
from typing import List

from .nil_clean_graph import NilCleanGraph, connected_components

PATH = "path"
CYCLE = "cycle"
OTHER = "other"


@dataclass
class StructureCensus:
    """Components of a graph sorted into paths, cycles and everything else.

    Sizes are vertex counts; a cycle on m vertices has length m. A lone
    vertex counts as a path on one vertex.
    """

    paths: List[int] = field(default_factory=list)
    cycles: List[int] = field(default_factory=list)
    other: List[int] = field(default_factory=list)

    @property
    def component_count(self) -> int:
        return len(self.paths) + len(self.cycles) + len(self.other)

    def to_dict(self) -> dict:
        return {"paths": list(self.paths), "cycles": list(self.cycles), "other": list(self.other)}

    @classmethod
    def from_dict(cls, data: dict) -> "StructureCensus":
        return cls(list(data["paths"]), list(data["cycles"]), list(data["other"]))


def classify_component(g: NilCleanGraph, component: List[int]) -> str:
    degrees = sorted(g.degree(v) for v in component)
    if len(component) == 1:
        return PATH
    if all(d == 2 for d in degrees):
        return CYCLE
    if degrees[:2] == [1, 1] and all(d == 2 for d in degrees[2:]):
        return PATH
    return OTHER


def structure_census(g: NilCleanGraph) -> StructureCensus:
    census = StructureCensus()
    buckets = {PATH: census.paths, CYCLE: census.cycles, OTHER: census.other}
    for component in connected_components(g):
        buckets[classify_component(g, component)].append(len(component))
    for sizes in buckets.values():
        sizes.sort()
    return census
