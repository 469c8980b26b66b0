"""
The nil clean graph G_N(R) and its basic invariants.

Vertices are the carrier indices of R; x ~ y iff x != y and x + y is nil
clean. Adjacency rows are int bitsets, so BFS frontiers expand by OR-ing
whole rows and the per-level work is word-parallel.
"""

from collections import deque
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..nil_clean import nil_clean_set
from ..rings.finite_ring import FiniteRing
from ..utils.bitset import ElementSet, bits_from_mask, iter_bits


class _Infinite:
    """Girth or diameter of a graph with no cycle / no connecting path.

    Shows as "∞" to people and serializes as "inf".
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return "INFINITE"

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "∞"

    def to_json(self):
        return "inf"


INFINITE = _Infinite()


def invariant_to_json(value):
    return value.to_json() if value is INFINITE else value


def invariant_from_json(value):
    return INFINITE if value == "inf" else value


class NilCleanGraph:
    """Simple undirected graph on the carrier of a ring.

    Attributes:
        ring (FiniteRing): The ring the graph was built from.
        nilclean (ElementSet): NC(R).
        adjacency (list[int]): adjacency[x] has bit y set iff x ~ y.
        edge_count (int): Number of edges.
    """

    def __init__(self, ring: FiniteRing, nilclean: ElementSet, adjacency: List[int]):
        self.ring = ring
        self.nilclean = nilclean
        self.adjacency = adjacency
        self.order = ring.order
        self.edge_count = sum(row.bit_count() for row in adjacency) // 2

    @property
    def all_vertices(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adjacency[a] >> b & 1)

    def neighbors(self, x: int) -> List[int]:
        return list(iter_bits(self.adjacency[x]))

    def closed_neighborhood(self, x: int) -> int:
        return self.adjacency[x] | (1 << x)

    def degree(self, x: int) -> int:
        return self.adjacency[x].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees())

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (a, b) with a < b, in increasing order."""
        for a, row in enumerate(self.adjacency):
            for b in iter_bits(row >> (a + 1)):
                yield a, a + 1 + b

    def is_complete(self) -> bool:
        return self.edge_count == self.order * (self.order - 1) // 2

    def __repr__(self):
        return f"<NilCleanGraph {self.ring.name} vertices={self.order} edges={self.edge_count}>"


def build_graph(r: FiniteRing, nilclean: Optional[ElementSet] = None) -> NilCleanGraph:
    """G_N(R): x ~ y iff x != y and x + y is in NC(R)."""
    if nilclean is None:
        nilclean = nil_clean_set(r)
    nc_mask = nilclean.mask()
    adjacency = []
    for a in range(r.order):
        row = nc_mask[r.add_row(a)]
        row[a] = False
        adjacency.append(bits_from_mask(row))
    return NilCleanGraph(r, nilclean, adjacency)


def degree(g: NilCleanGraph, x: int) -> int:
    return g.degree(x)


def degree_formula_violations(g: NilCleanGraph) -> List[int]:
    """Vertices whose degree is not |NC|-1 (when 2x is nil clean) or |NC|."""
    nc_size = len(g.nilclean)
    doubles = np.asarray(g.ring.add(g.ring.elements, g.ring.elements))
    bad = []
    for x in range(g.order):
        expected = nc_size - 1 if int(doubles[x]) in g.nilclean else nc_size
        if g.degree(x) != expected:
            bad.append(x)
    return bad


def degree_formula_check(g: NilCleanGraph) -> bool:
    return not degree_formula_violations(g)


def bfs_layers(g: NilCleanGraph, source: int) -> List[int]:
    """Distance layers from *source* as bitsets; layers[d] = vertices at distance d."""
    visited = frontier = 1 << source
    layers = [frontier]
    while True:
        reached = 0
        for v in iter_bits(frontier):
            reached |= g.adjacency[v]
        frontier = reached & ~visited
        if not frontier:
            return layers
        visited |= frontier
        layers.append(frontier)


def distances_from(g: NilCleanGraph, source: int) -> List[object]:
    """d(source, x) for every x, INFINITE where unreachable."""
    distances = [INFINITE] * g.order
    for d, layer in enumerate(bfs_layers(g, source)):
        for v in iter_bits(layer):
            distances[v] = d
    return distances


def connected_components(g: NilCleanGraph) -> List[List[int]]:
    """Vertex sets of the components, ordered by their smallest vertex."""
    components = []
    unseen = g.all_vertices
    while unseen:
        source = (unseen & -unseen).bit_length() - 1
        reached = 0
        for layer in bfs_layers(g, source):
            reached |= layer
        components.append(list(iter_bits(reached)))
        unseen &= ~reached
    return components


def is_connected(g: NilCleanGraph) -> bool:
    return sum(layer.bit_count() for layer in bfs_layers(g, 0)) == g.order


def girth(g: NilCleanGraph):
    """Length of a shortest cycle, or INFINITE for a forest.

    A triangle scan over the edges settles the common case; otherwise a BFS
    from every vertex finds the shortest cycle through it.
    """
    for a, b in g.edges():
        if g.adjacency[a] & g.adjacency[b]:
            return 3

    best = None
    n = g.order
    for source in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for v in iter_bits(g.adjacency[u]):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return INFINITE if best is None else best


def eccentricity(g: NilCleanGraph, source: int):
    layers = bfs_layers(g, source)
    if sum(layer.bit_count() for layer in layers) < g.order:
        return INFINITE
    return len(layers) - 1


def diameter(g: NilCleanGraph):
    """Largest distance over all vertex pairs; INFINITE when disconnected."""
    if g.is_complete():
        return min(1, g.order - 1)
    result = 0
    for source in range(g.order):
        e = eccentricity(g, source)
        if e is INFINITE:
            return INFINITE
        result = max(result, e)
    return result


def odd_cycle_witness(g: NilCleanGraph) -> Optional[Tuple[int, int]]:
    """An edge joining two vertices at the same BFS depth, if any.

    Such an edge closes an odd cycle; without one the depth parity is a
    proper 2-colouring.
    """
    unseen = g.all_vertices
    while unseen:
        source = (unseen & -unseen).bit_length() - 1
        for layer in bfs_layers(g, source):
            for v in iter_bits(layer):
                clash = g.adjacency[v] & layer
                if clash:
                    return v, (clash & -clash).bit_length() - 1
            unseen &= ~layer
    return None


def is_bipartite(g: NilCleanGraph) -> bool:
    return odd_cycle_witness(g) is None


def is_cycle_graph(g: NilCleanGraph) -> bool:
    """Connected and 2-regular."""
    return all(d == 2 for d in g.degrees()) and len(connected_components(g)) == 1


def dominates(g: NilCleanGraph, vertices) -> bool:
    covered = 0
    for v in vertices:
        covered |= g.closed_neighborhood(int(v))
    return covered == g.all_vertices


def undominated(g: NilCleanGraph, vertices) -> List[int]:
    covered = 0
    for v in vertices:
        covered |= g.closed_neighborhood(int(v))
    return list(iter_bits(g.all_vertices & ~covered))
