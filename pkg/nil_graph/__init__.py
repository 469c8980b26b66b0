"""
nil_graph: nil clean graphs of finite rings.

Vertices are the elements of a finite ring R; x and y are adjacent when
x != y and x + y = e + n for an idempotent e and a nilpotent n.
"""

from .errors import (
    ConfigError,
    NilGraphError,
    NonCommutativeRingError,
    RingAxiomError,
    RingSpecError,
    SearchTooLargeError,
)
from .graph.coloring import class_one_certificate, sum_edge_coloring
from .graph.census import structure_census
from .graph.dominating import dominating_pair_check, min_dominating_set
from .graph.nil_clean_graph import (
    INFINITE,
    NilCleanGraph,
    build_graph,
    connected_components,
    degree,
    degree_formula_check,
    diameter,
    girth,
    is_bipartite,
    is_cycle_graph,
)
from .graph.paths import hamiltonian_path_zn, matrix_path_to_zero, validate_path
from .graph.report import InvariantReport, compute_report
from .harness.cases import CASES, product_dominating_check
from .harness.suite import SuiteReport, run_suite
from .nil_clean import (
    NilCleanProfile,
    idempotents,
    is_weak_nil_clean,
    nil_clean_set,
    nilclean_profile,
    nilpotents,
    nilradical,
)
from .rings import build_ring, check_ring_axioms, parse_spec

__version__ = "1.0.0"
