import pickle

import networkx as nx
import pytest

from nil_graph.graph.nil_clean_graph import (
    INFINITE,
    bfs_layers,
    connected_components,
    degree_formula_check,
    degree_formula_violations,
    diameter,
    distances_from,
    dominates,
    eccentricity,
    girth,
    invariant_from_json,
    invariant_to_json,
    is_bipartite,
    is_connected,
    is_cycle_graph,
    odd_cycle_witness,
    undominated,
)

ORACLE_SPECS = [
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "Z7",
    "Z8",
    "Z9",
    "Z10",
    "Z12",
    "Z15",
    "Z16",
    "GF(2,2)",
    "GF(2,3)",
    "GF(3,2)",
    "GF(5,2)",
    "Z2xZ2",
    "Z2xZ3",
    "Z3xZ3",
    "Z4xZ3",
    "M2(Z2)",
    "Q(Z12)",
]


def _as_nx(value):
    return float("inf") if value is INFINITE else value


@pytest.mark.parametrize("spec", ORACLE_SPECS)
def test_invariants_match_networkx(spec, graph, oracle):
    g = graph(spec)
    h = oracle(g)
    assert g.edge_count == h.number_of_edges()
    assert g.degrees() == [h.degree(v) for v in range(g.order)]
    assert sorted(map(sorted, connected_components(g))) == sorted(sorted(c) for c in nx.connected_components(h))
    assert is_connected(g) == nx.is_connected(h)
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert _as_nx(girth(g)) == nx.girth(h)
    expected_diameter = nx.diameter(h) if nx.is_connected(h) else float("inf")
    assert _as_nx(diameter(g)) == expected_diameter


def test_gf25_graph(graph):
    g = graph("GF(5,2)")
    assert g.nilclean.indices() == [0, 1]
    assert g.edge_count == 24
    assert [len(c) for c in connected_components(g)] == [5, 10, 10]
    assert girth(g) == 10
    assert diameter(g) is INFINITE
    assert is_bipartite(g)


def test_z5_is_a_path(graph):
    g = graph("Z5")
    assert list(g.edges()) == [(0, 1), (1, 4), (2, 3), (2, 4)]
    assert [bits.bit_length() - 1 for bits in bfs_layers(g, 0)] == [0, 1, 4, 2, 3]
    assert distances_from(g, 0) == [0, 1, 3, 4, 2]
    assert eccentricity(g, 0) == 4
    assert girth(g) is INFINITE


def test_z6_adjacency(graph):
    g = graph("Z6")
    assert g.neighbors(1) == [0, 2, 3, 5]
    assert g.degrees() == [3, 4, 3, 3, 4, 3]
    assert g.max_degree() == 4
    assert not g.has_edge(1, 4)
    assert not g.is_complete()


@pytest.mark.parametrize("spec, expected", [("Z7", 6), ("Z8", 1), ("Z12", 2), ("Z10", 4), ("Z3", 2), ("Z2", 1)])
def test_zn_diameters(spec, expected, graph):
    assert diameter(graph(spec)) == expected


def test_nil_clean_rings_give_complete_graphs(graph):
    for spec in ("Z4", "Z8", "Z2xZ2", "M2(Z2)"):
        g = graph(spec)
        assert g.is_complete()
        assert girth(g) == 3


@pytest.mark.parametrize("spec", ["Z6", "Z9", "Z12", "GF(5,2)", "Z4xZ3", "M2(Z2)", "Q(Z12)"])
def test_degree_formula(spec, graph):
    g = graph(spec)
    assert degree_formula_check(g)
    assert degree_formula_violations(g) == []


def test_odd_cycle_witness(graph):
    assert odd_cycle_witness(graph("GF(5,2)")) is None
    a, b = odd_cycle_witness(graph("Z6"))
    assert graph("Z6").has_edge(a, b)


def test_never_a_cycle_graph(graph):
    for spec in ("Z3", "Z5", "Z6", "GF(3,2)", "GF(5,2)"):
        assert not is_cycle_graph(graph(spec))


def test_dominates(graph):
    g = graph("Z5")
    assert dominates(g, [0, 2])
    assert not dominates(g, [0])
    assert undominated(g, [0]) == [2, 3, 4]


def test_infinite_marker():
    assert str(INFINITE) == "∞"
    assert invariant_to_json(INFINITE) == "inf"
    assert invariant_from_json("inf") is INFINITE
    assert invariant_to_json(7) == 7
    assert pickle.loads(pickle.dumps(INFINITE)) is INFINITE
