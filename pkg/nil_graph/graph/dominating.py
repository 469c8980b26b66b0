"""
Minimum dominating sets of nil clean graphs.

Each connected component is handed to OR-Tools CP-SAT: one boolean per
vertex, and every closed neighbourhood must contain a chosen vertex. The
first solve minimizes the number of chosen vertices. Further solves fix that
size and pick the chosen vertices one at a time, each time minimizing the
smallest vertex not yet fixed, which yields the lexicographically least
minimum set.
"""

from dataclasses import dataclass
from typing import Dict, List

from ortools.sat.python import cp_model

from ..config.config_loader import get_dominating_time_limit, get_exact_dominating_cap
from ..errors import SearchTooLargeError
from ..harness.verdict import Mismatch, Pass, Skipped, Verdict
from ..nil_clean import is_weak_nil_clean
from ..utils.bitset import ElementSet, iter_bits
from ..utils.logs import log
from .nil_clean_graph import NilCleanGraph, connected_components, undominated


@dataclass(frozen=True)
class DominatingResult:
    """A dominating set and whether it is known to be minimum."""

    vertices: ElementSet
    exact: bool

    @property
    def size(self) -> int:
        return len(self.vertices)


class _ComponentSolver:
    def __init__(self, g: NilCleanGraph, component: List[int], time_limit: float):
        self.g = g
        self.vertices = sorted(component)
        self.time_limit = time_limit

    def _model(self):
        model = cp_model.CpModel()
        chosen: Dict[int, cp_model.IntVar] = {v: model.NewBoolVar(f"x_{v}") for v in self.vertices}
        for u in self.vertices:
            model.AddBoolOr([chosen[v] for v in iter_bits(self.g.closed_neighborhood(u))])
        return model, chosen

    def _solve(self, model) -> cp_model.CpSolver:
        solver = cp_model.CpSolver()
        solver.parameters.num_search_workers = 1
        solver.parameters.max_time_in_seconds = self.time_limit
        status = solver.Solve(model)
        if status != cp_model.OPTIMAL:
            raise SearchTooLargeError(
                f"{self.g.ring.name}: dominating search stopped with {solver.StatusName(status)} "
                f"after {self.time_limit:g}s"
            )
        return solver

    def minimum_size(self) -> int:
        model, chosen = self._model()
        model.Minimize(sum(chosen.values()))
        return round(self._solve(model).ObjectiveValue())

    def lex_least(self, size: int) -> List[int]:
        picked = []
        threshold = -1
        none = self.g.order
        while len(picked) < size:
            model, chosen = self._model()
            model.Add(sum(chosen.values()) == size)
            for v in self.vertices:
                if v <= threshold:
                    model.Add(chosen[v] == int(v in picked))
            later = [v for v in self.vertices if v > threshold]
            first = model.NewIntVar(later[0], none, "first")
            model.AddMinEquality(first, [v * chosen[v] + none * (1 - chosen[v]) for v in later])
            model.Minimize(first)
            threshold = self._solve(model).Value(first)
            picked.append(threshold)
        return picked


def greedy_dominating_set(g: NilCleanGraph) -> List[int]:
    """Repeatedly take the vertex dominating the most undominated vertices
    (smallest index on ties)."""
    todo = g.all_vertices
    chosen = []
    while todo:
        best, best_gain = -1, -1
        for v in range(g.order):
            gain = (g.closed_neighborhood(v) & todo).bit_count()
            if gain > best_gain:
                best, best_gain = v, gain
        chosen.append(best)
        todo &= ~g.closed_neighborhood(best)
    return sorted(chosen)


def min_dominating_set(g: NilCleanGraph, cap: int = None, time_limit: float = None) -> ElementSet:
    """The lexicographically least minimum dominating set.

    Raises:
        SearchTooLargeError: The graph has more than *cap* vertices or a
            solve runs past *time_limit* seconds.
    """
    if cap is None:
        cap = get_exact_dominating_cap()
    if time_limit is None:
        time_limit = get_dominating_time_limit()
    if g.order > cap:
        raise SearchTooLargeError(f"{g.ring.name}: {g.order} vertices exceeds the exact cap {cap}")

    chosen = []
    for component in connected_components(g):
        solver = _ComponentSolver(g, component, time_limit)
        chosen.extend(solver.lex_least(solver.minimum_size()))
    return ElementSet.from_indices(chosen, g.order)


def dominating_set(g: NilCleanGraph, cap: int = None, time_limit: float = None) -> DominatingResult:
    """Exact minimum when the search fits, otherwise the greedy bound."""
    try:
        return DominatingResult(min_dominating_set(g, cap, time_limit), exact=True)
    except SearchTooLargeError as e:
        log("DOMINATING", f"{e}; using the greedy bound")
        return DominatingResult(ElementSet.from_indices(greedy_dominating_set(g), g.order), exact=False)


def set_dominates(g: NilCleanGraph, vertices) -> Verdict:
    """Pass iff *vertices* dominate g; the witness is the first undominated vertex."""
    missed = undominated(g, vertices)
    if not missed:
        return Pass()
    labels = tuple(g.ring.label(v) for v in vertices)
    return Mismatch((g.ring.label(missed[0]),), note=f"not dominated by {{{', '.join(labels)}}}")


def dominating_pair_check(g: NilCleanGraph) -> Verdict:
    """{1, 1+1} dominates G_N(R) when R is weak nil clean."""
    r = g.ring
    if not is_weak_nil_clean(r):
        return Skipped(f"{r.name} is not weak nil clean")
    two = int(r.add(r.one, r.one))
    return set_dominates(g, sorted({r.one, two}))
