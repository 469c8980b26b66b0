from itertools import combinations

import networkx as nx
import pytest

from nil_graph.errors import SearchTooLargeError
from nil_graph.graph import dominating
from nil_graph.graph.dominating import (
    dominating_pair_check,
    dominating_set,
    greedy_dominating_set,
    min_dominating_set,
    set_dominates,
)
from nil_graph.graph.nil_clean_graph import dominates
from nil_graph.harness.verdict import Mismatch, Pass, Skipped


def _brute_force(g):
    """Lexicographically first dominating set of the smallest size."""
    for size in range(1, g.order + 1):
        for candidate in combinations(range(g.order), size):
            if dominates(g, candidate):
                return list(candidate)


@pytest.mark.parametrize(
    "spec",
    ["Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z9", "Z10", "Z11", "Z12", "Z15", "GF(2,2)", "GF(3,2)", "Z2xZ3", "Z3xZ3"],
)
def test_minimum_matches_brute_force(spec, graph, oracle):
    g = graph(spec)
    found = min_dominating_set(g)
    assert found.indices() == _brute_force(g)
    assert nx.is_dominating_set(oracle(g), found.indices())


@pytest.mark.parametrize("spec, expected", [("Z6", [0, 1]), ("Z5", [0, 2]), ("Z9", [0, 1]), ("Z3", [1]), ("Z4", [0])])
def test_known_minimum_sets(spec, expected, graph):
    assert min_dominating_set(graph(spec)).indices() == expected


def test_disconnected_graph_is_solved_per_component(graph):
    g = graph("GF(5,2)")
    found = min_dominating_set(g)
    assert dominates(g, found)
    # a 5-vertex path needs 2, each 10-cycle needs 4
    assert len(found) == 10


def test_cap(graph):
    with pytest.raises(SearchTooLargeError):
        min_dominating_set(graph("Z6"), cap=4)


@pytest.mark.parametrize("spec", ["Z46", "Z51", "Z99", "Z168", "M2(Z3)"])
def test_exact_on_larger_rings(spec, graph):
    g = graph(spec)
    result = dominating_set(g)
    assert result.exact
    assert dominates(g, result.vertices)
    assert result.size <= len(greedy_dominating_set(g))


def test_solver_timeout_falls_back_to_greedy(graph, monkeypatch):
    def stopped(self, model):
        raise SearchTooLargeError("stopped")

    monkeypatch.setattr(dominating._ComponentSolver, "_solve", stopped)
    g = graph("Z5")
    result = dominating_set(g)
    assert not result.exact
    assert dominates(g, result.vertices)


def test_greedy_fallback(graph):
    g = graph("Z6")
    result = dominating_set(g, cap=4)
    assert not result.exact
    assert dominates(g, result.vertices)
    exact = dominating_set(g)
    assert exact.exact
    assert exact.size == 2


def test_greedy_dominates(graph):
    for spec in ("Z7", "GF(5,2)", "Z4xZ3"):
        g = graph(spec)
        assert dominates(g, greedy_dominating_set(g))


def test_set_dominates_reports_first_missed_vertex(graph):
    g = graph("Z5")
    assert set_dominates(g, [0, 2]) == Pass()
    verdict = set_dominates(g, [0])
    assert isinstance(verdict, Mismatch)
    assert verdict.witness == ("2",)
    assert not verdict.expected


@pytest.mark.parametrize("spec", ["Z2", "Z3", "Z6", "Z9", "Z12", "Z4xZ3", "Z2xZ9"])
def test_one_and_two_dominate_weak_nil_clean_rings(spec, graph):
    assert dominating_pair_check(graph(spec)) == Pass()


def test_pair_check_skips_other_rings(graph):
    assert isinstance(dominating_pair_check(graph("Z5")), Skipped)
