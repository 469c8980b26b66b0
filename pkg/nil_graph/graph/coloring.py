"""
Edge colourings of nil clean graphs.

The sum colouring gives edge ab the colour a + b. It is always proper: the
edges at a get colours a + y for distinct y, and y -> a + y is injective.
Every colour is nil clean, so at most |NC(R)| colours are used.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..utils.bitset import ElementSet, bits_from_mask, iter_bits
from .nil_clean_graph import NilCleanGraph, connected_components

Edge = Tuple[int, int]


@dataclass
class ColoringCertificate:
    """Summary of the sum colouring.

    Attributes:
        colors (ElementSet): Colours realized on at least one edge; a subset of NC(R).
        color_count (int): |colors|, an upper bound on the chromatic index.
        proper (bool): No two edges at a vertex share a colour.
        max_degree (int): Δ, a lower bound on the chromatic index.
        class_one (bool): color_count == max_degree.
        conflict (tuple | None): (vertex, colour) of the first clash when not proper.
        edge_colors (list | None): [a, b, a + b] per edge, only when requested.
    """

    colors: ElementSet
    color_count: int
    proper: bool
    max_degree: int
    class_one: bool
    conflict: Optional[Tuple[int, int]] = None
    edge_colors: Optional[List[List[int]]] = field(default=None, repr=False)


def sum_edge_coloring(g: NilCleanGraph, include_edges: bool = False) -> ColoringCertificate:
    """Colour edge ab with a + b and certify the result."""
    r = g.ring
    realized = 0
    conflict = None
    for a in range(g.order):
        neighbors = np.asarray(list(iter_bits(g.adjacency[a])), dtype=np.int64)
        if not len(neighbors):
            continue
        sums = r.add_row(a)[neighbors]
        if conflict is None:
            values, counts = np.unique(sums, return_counts=True)
            if (counts > 1).any():
                conflict = (a, int(values[np.argmax(counts > 1)]))
        mask = np.zeros(g.order, dtype=bool)
        mask[sums] = True
        realized |= bits_from_mask(mask)

    colors = ElementSet(realized, g.order)
    max_degree = g.max_degree()
    edge_colors = None
    if include_edges:
        edge_colors = [[a, b, int(r.add(a, b))] for a, b in g.edges()]
    return ColoringCertificate(
        colors=colors,
        color_count=len(colors),
        proper=conflict is None,
        max_degree=max_degree,
        class_one=len(colors) == max_degree,
        conflict=conflict,
        edge_colors=edge_colors,
    )


def is_proper_edge_coloring(g: NilCleanGraph, coloring: Dict[Edge, int]) -> bool:
    """Every edge coloured and no colour repeated at a vertex."""
    seen = set()
    count = 0
    for (a, b), c in coloring.items():
        if not g.has_edge(a, b):
            return False
        for v in (a, b):
            if (v, c) in seen:
                return False
            seen.add((v, c))
        count += 1
    return count == g.edge_count


def round_robin_coloring(vertices: List[int]) -> Dict[Edge, int]:
    """Proper (m-1)-edge-colouring of the complete graph on an even number m of vertices.

    Round r pairs the last vertex with vertices[r] and vertices[r+i] with
    vertices[r-i] (indices mod m-1), a perfect matching per round.
    """
    m = len(vertices)
    if m % 2:
        raise ValueError("round robin needs an even number of vertices")
    rounds = m - 1
    coloring = {}

    def put(i, j, color):
        a, b = sorted((vertices[i], vertices[j]))
        coloring[(a, b)] = color

    for r in range(rounds):
        put(m - 1, r, r)
        for i in range(1, m // 2):
            put((r + i) % rounds, (r - i) % rounds, r)
    return coloring


def class_one_certificate(g: NilCleanGraph) -> Optional[Dict[Edge, int]]:
    """An edge colouring with Δ colours, or None when none is found.

    Components whose sum colouring already fits in Δ colours keep it. A
    component that is a complete graph on an even number of vertices gets a
    round-robin colouring instead. Anything else is left undecided.
    """
    r = g.ring
    max_degree = g.max_degree()
    coloring: Dict[Edge, int] = {}
    for component in connected_components(g):
        edges = [(a, b) for a in component for b in g.neighbors(a) if a < b]
        sums = {edge: int(r.add(*edge)) for edge in edges}
        palette = sorted(set(sums.values()))
        if len(palette) <= max_degree:
            renumber = {c: i for i, c in enumerate(palette)}
            coloring.update({edge: renumber[c] for edge, c in sums.items()})
            continue
        m = len(component)
        complete = len(edges) == m * (m - 1) // 2
        if complete and m % 2 == 0 and m - 1 <= max_degree:
            coloring.update(round_robin_coloring(component))
            continue
        return None
    return coloring


def chromatic_index_bounds(certificate: ColoringCertificate) -> Tuple[int, int]:
    """Δ <= χ′ <= number of sum colours."""
    return certificate.max_degree, certificate.color_count


def colors_within(certificate: ColoringCertificate, nilclean: ElementSet) -> bool:
    return certificate.colors.issubset(nilclean)


def colors_used(coloring: Dict[Edge, int]) -> int:
    return len(set(coloring.values()))