"""
Theorem cases: each graph-theoretic claim about nil clean graphs as an
executable check.

A case has an applicability predicate and a check. The predicate decides
whether the claim's hypotheses hold for a ring; when they do not the case is
Skipped. The check returns Pass or a Mismatch with a concrete witness.
Claims resting on an outside decomposition of weak nil clean rings are
checked by their conclusion only.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np
from sympy import factorint, isprime

from ..errors import SearchTooLargeError
from ..graph.coloring import class_one_certificate, colors_used, is_proper_edge_coloring
from ..graph.dominating import min_dominating_set, set_dominates
from ..graph.nil_clean_graph import (
    INFINITE,
    bfs_layers,
    build_graph,
    degree_formula_violations,
    is_cycle_graph,
)
from ..graph.paths import hamiltonian_path_zn, matrix_path_to_zero, path_violation
from ..nil_clean import is_weak_nil_clean, nil_clean_set
from ..rings.builder import build_ring
from ..rings.finite_ring import FiniteRing
from ..rings.product import ProductRing
from ..rings.quotient import build_quotient_by_nilradical
from ..rings.ring_spec import MatrixSpec, ProductSpec, ZnSpec
from .context import RingContext
from .verdict import Mismatch, Pass, Skipped, Verdict, check


@dataclass(frozen=True)
class TheoremCase:
    """One claim.

    Attributes:
        id (str): Stable identifier used on the command line and in reports.
        claim (str): The statement being checked.
        requires (str): Hypotheses, shown when the case is skipped.
        applies (callable): RingContext -> bool.
        check (callable): RingContext -> Verdict, only called when applies.
    """

    id: str
    claim: str
    requires: str
    applies: Callable[[RingContext], bool]
    check: Callable[[RingContext], Verdict]

    def run(self, ctx: RingContext) -> Verdict:
        if not self.applies(ctx):
            return Skipped(f"needs {self.requires}")
        try:
            return self.check(ctx)
        except SearchTooLargeError as e:
            return Skipped(str(e))


# --- predicates ------------------------------------------------------------


def _always(ctx: RingContext) -> bool:
    return True


def _commutative(ctx: RingContext) -> bool:
    return ctx.ring.commutative


def _zn_modulus(ctx: RingContext) -> Optional[int]:
    return ctx.spec.n if isinstance(ctx.spec, ZnSpec) else None


def _is_zn(ctx: RingContext) -> bool:
    return _zn_modulus(ctx) is not None


def _is_matrix(ctx: RingContext) -> bool:
    return isinstance(ctx.spec, MatrixSpec)


def _odd_extension_field(ctx: RingContext) -> bool:
    """GF(p^k) with p odd and k > 1."""
    if not ctx.profile.is_field:
        return False
    p, k = ctx.field_parameters
    return p % 2 == 1 and k > 1


def _other_field(ctx: RingContext) -> bool:
    return ctx.profile.is_field and not _odd_extension_field(ctx)


def _non_field(ctx: RingContext) -> bool:
    return not ctx.profile.is_field


def _nontrivial_nilradical(ctx: RingContext) -> bool:
    return ctx.ring.commutative and not ctx.profile.is_reduced


def _weak_nil_clean(ctx: RingContext) -> bool:
    return ctx.profile.is_weak_nil_clean_ring


def _weak_nil_clean_trivial_idempotents(ctx: RingContext) -> bool:
    return ctx.profile.is_weak_nil_clean_ring and ctx.profile.has_trivial_idempotents


def _weak_not_nil_clean(ctx: RingContext) -> bool:
    p = ctx.profile
    return ctx.ring.commutative and p.is_weak_nil_clean_ring and not p.is_nil_clean_ring


def _weak_not_nil_clean_trivial_idempotents(ctx: RingContext) -> bool:
    return _weak_not_nil_clean(ctx) and ctx.profile.has_trivial_idempotents


# --- helpers ---------------------------------------------------------------


def _farthest_pair(ctx: RingContext) -> Tuple[str, str, str]:
    """Two vertices at maximum distance, with that distance, as labels."""
    g = ctx.graph
    if len(ctx.components) > 1:
        a, b = ctx.components[0][0], ctx.components[1][0]
        return ctx.ring.label(a), ctx.ring.label(b), str(INFINITE)
    best = (0, 0, 0)
    for source in range(g.order):
        layers = bfs_layers(g, source)
        if len(layers) - 1 > best[2]:
            far = (layers[-1] & -layers[-1]).bit_length() - 1
            best = (source, far, len(layers) - 1)
    a, b, d = best
    return ctx.ring.label(a), ctx.ring.label(b), str(d)


def _diameter_is(ctx: RingContext, expected) -> Verdict:
    if ctx.diameter == expected:
        return Pass()
    return Mismatch(_farthest_pair(ctx), note=f"diameter {ctx.diameter}, claimed {expected}")


def _triangle(ctx: RingContext) -> Optional[Tuple[int, int, int]]:
    g = ctx.graph
    for a, b in g.edges():
        common = g.adjacency[a] & g.adjacency[b]
        if common:
            return a, b, (common & -common).bit_length() - 1
    return None


def _girth_is(ctx: RingContext, expected) -> Verdict:
    if ctx.girth == expected:
        return Pass()
    triangle = _triangle(ctx)
    witness = ctx.labels(triangle) if triangle else (str(ctx.girth),)
    return Mismatch(witness, note=f"girth {ctx.girth}, claimed {expected}")


def _subring_spec(factors):
    return factors[0] if len(factors) == 1 else ProductSpec(tuple(factors))


def product_splits(ctx: RingContext) -> Iterator[Tuple[FiniteRing, FiniteRing]]:
    """Every way of writing a product ring as A x B, factors kept together
    on each side, in both orders."""
    if not isinstance(ctx.spec, ProductSpec):
        return
    factors = ctx.spec.factors
    for cut in range(1, len(factors)):
        left = build_ring(_subring_spec(factors[:cut]))
        right = build_ring(_subring_spec(factors[cut:]))
        yield left, right
        yield right, left


def dominating_product_hypotheses(a: FiniteRing, b: FiniteRing) -> Optional[str]:
    """None when A is nil clean and B is weak nil clean with trivial
    idempotents, otherwise the reason they fail."""
    if not nil_clean_set(a).is_full():
        return f"{a.name} is not nil clean"
    if not is_weak_nil_clean(b):
        return f"{b.name} is not weak nil clean"
    if int(np.count_nonzero(b.idempotent_mask)) != 2:
        return f"{b.name} has nontrivial idempotents"
    return None


def product_dominating_check(a: FiniteRing, b: FiniteRing, graph=None) -> Verdict:
    """{(1_A, 1_B), (2_A, 2_B)} dominates G_N(A x B).

    Skipped unless A is nil clean and B weak nil clean with only trivial
    idempotents.
    """
    reason = dominating_product_hypotheses(a, b)
    if reason is not None:
        return Skipped(reason)
    if graph is None:
        graph = build_graph(ProductRing([a, b]))
    ring = graph.ring
    pair = sorted({ring.one, int(ring.add(ring.one, ring.one))})
    return set_dominates(graph, pair)


def _product_split_with(ctx: RingContext, need_b_not_nil_clean: bool):
    for a, b in product_splits(ctx):
        if dominating_product_hypotheses(a, b) is not None:
            continue
        if need_b_not_nil_clean and nil_clean_set(b).is_full():
            continue
        return a, b
    return None


def zn_diameter_parts(n: int) -> Dict[str, int]:
    """Diameter of G_N(Z_n) predicted by each part of the Z_n diameter theorem
    that covers n, keyed by case id."""
    factors = factorint(n)
    parts = {}
    if set(factors) == {2}:
        parts["diam-zn-2k"] = 1
    if set(factors) <= {2, 3} and factors.get(3, 0) >= 1:
        parts["diam-zn-2k3l"] = 2
    if isprime(n):
        parts["diam-zn-prime"] = n - 1
    if n % 2 == 0 and isprime(n // 2) and n // 2 > 2:
        parts["diam-zn-2p"] = n // 2 - 1
    if n % 3 == 0 and isprime(n // 3) and n // 3 > 2:
        parts["diam-zn-3p"] = n // 3 - 1
    return parts


# --- checks ----------------------------------------------------------------


def check_complete_iff_nil_clean(ctx: RingContext) -> Verdict:
    g = ctx.graph
    if g.is_complete() == ctx.profile.is_nil_clean_ring:
        return Pass()
    if ctx.profile.is_nil_clean_ring:
        for a in range(g.order):
            missing = g.all_vertices & ~g.closed_neighborhood(a)
            if missing:
                b = (missing & -missing).bit_length() - 1
                return Mismatch(ctx.labels((a, b)), note="nil clean ring, vertices not adjacent")
    outside = next(x for x in range(g.order) if x not in ctx.profile.nilclean)
    return Mismatch(ctx.labels((outside,)), note="complete graph, element not nil clean")


def check_adjacency_lifting(ctx: RingContext) -> Verdict:
    r = ctx.ring
    quotient, coset_map = build_quotient_by_nilradical(r)
    quotient_graph = build_graph(quotient)
    nc = ctx.profile.nilclean.mask()
    cosets = [coset_map.coset(c) for c in range(quotient.order)]
    for c, d in quotient_graph.edges():
        sums = np.asarray(r.add(cosets[c][:, None], cosets[d][None, :]))
        bad = np.argwhere(~nc[sums])
        if len(bad):
            i, j = bad[0]
            return Mismatch(
                ctx.labels((cosets[c][i], cosets[d][j])),
                note=f"cosets {quotient.label(c)} and {quotient.label(d)} are adjacent",
            )
    return Pass()


def check_idempotent_lifting(ctx: RingContext) -> Verdict:
    quotient, coset_map = build_quotient_by_nilradical(ctx.ring)
    lifted = set(coset_map.projection[np.flatnonzero(ctx.ring.idempotent_mask)].tolist())
    for c in np.flatnonzero(quotient.idempotent_mask):
        if int(c) not in lifted:
            return Mismatch((quotient.label(c),), note="idempotent of R/nil(R) with no idempotent lift")
    return Pass()


def check_degree_lemma(ctx: RingContext) -> Verdict:
    bad = degree_formula_violations(ctx.graph)
    if not bad:
        return Pass()
    x = bad[0]
    return Mismatch(
        (ctx.ring.label(x), str(ctx.graph.degree(x))),
        note=f"|NC| = {len(ctx.profile.nilclean)}",
    )


def check_zn_connected(ctx: RingContext) -> Verdict:
    path = hamiltonian_path_zn(_zn_modulus(ctx))
    bad = path_violation(ctx.graph, path)
    if bad is not None:
        return Mismatch(ctx.labels(bad), note="consecutive path vertices not adjacent")
    return check(len(ctx.components) == 1, ctx.labels(c[0] for c in ctx.components[:2]))


def check_matrix_connected(ctx: RingContext) -> Verdict:
    for a in range(ctx.ring.order):
        path = matrix_path_to_zero(ctx.ring, a)
        bad = path_violation(ctx.graph, path)
        if bad is not None or path[-1] != ctx.ring.zero:
            return Mismatch((ctx.ring.label(a),), note="path to zero breaks")
    return check(len(ctx.components) == 1, ctx.labels(c[0] for c in ctx.components[:2]))


def check_field_disconnected(ctx: RingContext) -> Verdict:
    return check(len(ctx.components) > 1, (ctx.ring.name,), "graph is connected")


def check_finite_field_lemma(ctx: RingContext) -> Verdict:
    p = ctx.profile
    reduced_trivial = p.is_reduced and p.has_trivial_idempotents
    if reduced_trivial == p.is_field:
        return Pass()
    return Mismatch(
        (str(len(p.nilpotents)), str(len(p.idempotents))),
        note=f"field={p.is_field}, |nil|, |idem| as shown",
    )


def check_girth_nonfield(ctx: RingContext) -> Verdict:
    return _girth_is(ctx, 3)


def check_girth_odd_extension(ctx: RingContext) -> Verdict:
    p, _ = ctx.field_parameters
    return _girth_is(ctx, 2 * p)


def check_girth_infinite(ctx: RingContext) -> Verdict:
    return _girth_is(ctx, INFINITE)


def check_path_shape(ctx: RingContext) -> Verdict:
    census = ctx.census
    if census.paths == [ctx.ring.order] and not census.cycles and not census.other:
        return Pass()
    p, k = ctx.field_parameters
    return Mismatch(
        tuple(str(size) for size in census.paths),
        expected=p == 2 and k > 1,
        note=f"components {census.to_dict()}; fields of order 2^k, k > 1, give a perfect matching",
    )


def check_gf_census(ctx: RingContext) -> Verdict:
    p, k = ctx.field_parameters
    expected_cycles = [2 * p] * ((p ** (k - 1) - 1) // 2)
    census = ctx.census
    if census.paths == [p] and census.cycles == expected_cycles and not census.other:
        return Pass()
    return Mismatch(
        (str(census.paths), str(census.cycles)),
        note=f"expected one {p}-vertex path and {len(expected_cycles)} cycles of length {2 * p}",
    )


def check_not_cyclic(ctx: RingContext) -> Verdict:
    return check(not is_cycle_graph(ctx.graph), (ctx.ring.name,), "graph is a cycle")


def check_bipartite_iff_field(ctx: RingContext) -> Verdict:
    if ctx.bipartite == ctx.profile.is_field:
        return Pass()
    triangle = _triangle(ctx)
    witness = ctx.labels(triangle) if triangle else (ctx.ring.name,)
    return Mismatch(witness, note=f"bipartite={ctx.bipartite}, field={ctx.profile.is_field}")


def check_dominating_pair(ctx: RingContext) -> Verdict:
    r = ctx.ring
    pair = sorted({r.one, int(r.add(r.one, r.one))})
    return set_dominates(ctx.graph, pair)


def check_dominating_product(ctx: RingContext) -> Verdict:
    split = _product_split_with(ctx, need_b_not_nil_clean=False)
    if split is None:
        return Skipped("no split A x B with A nil clean and B weak nil clean with trivial idempotents")
    return product_dominating_check(split[0], split[1], ctx.graph)


def check_nil_clean_dominating_number(ctx: RingContext) -> Verdict:
    found = min_dominating_set(ctx.graph)
    return check(len(found) == 1, ctx.labels(found), "minimum dominating set larger than one vertex")


def check_class_one(ctx: RingContext) -> Verdict:
    certificate = ctx.coloring
    if not certificate.proper:
        return Mismatch(ctx.labels(certificate.conflict), note="two edges at a vertex share a colour")
    if not certificate.colors.issubset(ctx.profile.nilclean):
        return Mismatch(ctx.labels((certificate.colors.indices()[0],)), note="colour outside NC(R)")
    if certificate.class_one:
        return Pass()
    coloring = class_one_certificate(ctx.graph)
    if coloring is None:
        return Skipped(f"sum colouring uses {certificate.color_count} colours, Δ = {certificate.max_degree}")
    if is_proper_edge_coloring(ctx.graph, coloring) and colors_used(coloring) <= certificate.max_degree:
        return Pass()
    return Mismatch((str(colors_used(coloring)),), note="round-robin certificate is not a Δ-colouring")


def check_class_one_premise(ctx: RingContext) -> Verdict:
    max_degree = ctx.graph.max_degree()
    nc_size = len(ctx.profile.nilclean)
    if max_degree == nc_size:
        return Pass()
    return Mismatch(
        (str(max_degree), str(nc_size)),
        expected=ctx.doubles_nil_clean,
        note="every 2x is nil clean, so every degree is |NC| - 1",
    )


def check_diameter_nil_clean(ctx: RingContext) -> Verdict:
    if (ctx.diameter == 1) == ctx.profile.is_nil_clean_ring:
        return Pass()
    return Mismatch(_farthest_pair(ctx), note=f"nil clean={ctx.profile.is_nil_clean_ring}")


def check_diameter_two(ctx: RingContext) -> Verdict:
    return _diameter_is(ctx, 2)


def check_diameter_product(ctx: RingContext) -> Verdict:
    if _product_split_with(ctx, need_b_not_nil_clean=True) is None:
        return Skipped("no split A x B with A nil clean and B weak nil clean, not nil clean, trivial idempotents")
    return _diameter_is(ctx, 2)


def _zn_part(case_id: str):
    def applies(ctx: RingContext) -> bool:
        n = _zn_modulus(ctx)
        return n is not None and case_id in zn_diameter_parts(n)

    def run(ctx: RingContext) -> Verdict:
        return _diameter_is(ctx, zn_diameter_parts(_zn_modulus(ctx))[case_id])

    return applies, run


def _zn_overlap_applies(ctx: RingContext) -> bool:
    n = _zn_modulus(ctx)
    return n is not None and len(zn_diameter_parts(n)) > 1


def check_zn_overlap(ctx: RingContext) -> Verdict:
    parts = zn_diameter_parts(_zn_modulus(ctx))
    if len(set(parts.values())) == 1 and ctx.diameter in parts.values():
        return Pass()
    return Mismatch(
        tuple(f"{k}={v}" for k, v in sorted(parts.items())),
        note=f"diameter {ctx.diameter}",
    )


def _has_product_split(ctx: RingContext) -> bool:
    return isinstance(ctx.spec, ProductSpec)


def _nil_clean(ctx: RingContext) -> bool:
    return ctx.profile.is_nil_clean_ring


CASES: List[TheoremCase] = [
    TheoremCase(
        "complete-iff-nilclean",
        "G_N(R) is complete iff R is a nil clean ring",
        "any ring",
        _always,
        check_complete_iff_nil_clean,
    ),
    TheoremCase(
        "adjacency-lifting",
        "adjacent cosets of nil(R) are adjacent elementwise in G_N(R)",
        "a commutative ring with nonzero nilpotents",
        _nontrivial_nilradical,
        check_adjacency_lifting,
    ),
    TheoremCase(
        "idempotent-lifting",
        "idempotents lift modulo nil(R)",
        "a commutative ring",
        _commutative,
        check_idempotent_lifting,
    ),
    TheoremCase(
        "degree-lemma",
        "deg(x) = |NC(R)| - 1 if 2x is nil clean, else |NC(R)|",
        "any ring",
        _always,
        check_degree_lemma,
    ),
    TheoremCase(
        "zn-connected",
        "G_N(Z_n) has the Hamiltonian path 0, 1, n-1, 2, ... and is connected",
        "Z_n",
        _is_zn,
        check_zn_connected,
    ),
    TheoremCase(
        "matrix-connected",
        "every matrix over Z_m has a path to 0, so G_N(M_d(Z_m)) is connected",
        "a matrix ring over Z_m",
        _is_matrix,
        check_matrix_connected,
    ),
    TheoremCase(
        "field-disconnected",
        "G_N(R) need not be connected: GF(p^k), p odd, k > 1 is disconnected",
        "GF(p^k) with p odd and k > 1",
        _odd_extension_field,
        check_field_disconnected,
    ),
    TheoremCase(
        "lemma-field",
        "a finite commutative ring is reduced with trivial idempotents iff it is a field",
        "a commutative ring",
        _commutative,
        check_finite_field_lemma,
    ),
    TheoremCase(
        "girth-nonfield",
        "girth of G_N(R) is 3 when R is not a field",
        "a ring that is not a field",
        _non_field,
        check_girth_nonfield,
    ),
    TheoremCase(
        "girth-gf-odd",
        "girth of G_N(GF(p^k)) is 2p for p odd, k > 1",
        "GF(p^k) with p odd and k > 1",
        _odd_extension_field,
        check_girth_odd_extension,
    ),
    TheoremCase(
        "girth-infinite",
        "girth of G_N(R) is infinite for the remaining fields",
        "a prime field or GF(2^k)",
        _other_field,
        check_girth_infinite,
    ),
    TheoremCase(
        "girth-path-shape",
        "G_N(R) is a path for the remaining fields",
        "a prime field or GF(2^k)",
        _other_field,
        check_path_shape,
    ),
    TheoremCase(
        "gf-census",
        "G_N(GF(p^k)) is a p-vertex path and (p^(k-1) - 1)/2 cycles of length 2p",
        "GF(p^k) with p odd and k > 1",
        _odd_extension_field,
        check_gf_census,
    ),
    TheoremCase(
        "not-cyclic",
        "G_N(R) is not a cycle graph",
        "any ring",
        _always,
        check_not_cyclic,
    ),
    TheoremCase(
        "bipartite-iff-field",
        "G_N(R) is bipartite iff R is a field",
        "any ring",
        _always,
        check_bipartite_iff_field,
    ),
    TheoremCase(
        "dominating-pair-trivial-idem",
        "{1, 2} dominates G_N(R) for weak nil clean R with trivial idempotents",
        "a weak nil clean ring with trivial idempotents",
        _weak_nil_clean_trivial_idempotents,
        check_dominating_pair,
    ),
    TheoremCase(
        "dominating-product",
        "{(1, 1), (2, 2)} dominates G_N(A x B), A nil clean, B weak nil clean with trivial idempotents",
        "a product ring",
        _has_product_split,
        check_dominating_product,
    ),
    TheoremCase(
        "dominating-pair",
        "{1, 2} dominates G_N(R) for every weak nil clean R",
        "a weak nil clean ring",
        _weak_nil_clean,
        check_dominating_pair,
    ),
    TheoremCase(
        "dominating-nilclean",
        "a single vertex dominates G_N(R) when R is nil clean",
        "a nil clean ring",
        _nil_clean,
        check_nil_clean_dominating_number,
    ),
    TheoremCase(
        "class1",
        "G_N(R) is of class 1: chromatic index equals the maximum degree",
        "any ring",
        _always,
        check_class_one,
    ),
    TheoremCase(
        "class1-premise",
        "the maximum degree of G_N(R) is |NC(R)|",
        "any ring",
        _always,
        check_class_one_premise,
    ),
    TheoremCase(
        "diam-nilclean",
        "diam(G_N(R)) = 1 iff R is nil clean",
        "any ring",
        _always,
        check_diameter_nil_clean,
    ),
    TheoremCase(
        "diam-wnc-trivial-idem",
        "diam(G_N(R)) = 2 for weak nil clean, not nil clean R with trivial idempotents",
        "a commutative weak nil clean ring, not nil clean, with trivial idempotents",
        _weak_not_nil_clean_trivial_idempotents,
        check_diameter_two,
    ),
    TheoremCase(
        "diam-product",
        "diam(G_N(A x B)) = 2 for A nil clean and B weak nil clean with trivial idempotents",
        "a product ring",
        _has_product_split,
        check_diameter_product,
    ),
    TheoremCase(
        "diam-wnc",
        "diam(G_N(R)) = 2 for weak nil clean R that is not nil clean",
        "a commutative weak nil clean ring that is not nil clean",
        _weak_not_nil_clean,
        check_diameter_two,
    ),
    TheoremCase("diam-zn-2k", "diam(G_N(Z_n)) = 1 for n = 2^k", "n = 2^k", *_zn_part("diam-zn-2k")),
    TheoremCase(
        "diam-zn-2k3l",
        "diam(G_N(Z_n)) = 2 for n = 2^k 3^l, l >= 1",
        "n = 2^k 3^l with l >= 1",
        *_zn_part("diam-zn-2k3l"),
    ),
    TheoremCase("diam-zn-prime", "diam(G_N(Z_p)) = p - 1", "n prime", *_zn_part("diam-zn-prime")),
    TheoremCase(
        "diam-zn-2p",
        "diam(G_N(Z_2p)) = p - 1 for odd primes p",
        "n = 2p, p an odd prime",
        *_zn_part("diam-zn-2p"),
    ),
    TheoremCase(
        "diam-zn-3p",
        "diam(G_N(Z_3p)) = p - 1 for odd primes p",
        "n = 3p, p an odd prime",
        *_zn_part("diam-zn-3p"),
    ),
    TheoremCase(
        "diam-zn-overlap",
        "Z_n diameter formulas agree where several apply",
        "n covered by more than one Z_n diameter formula",
        _zn_overlap_applies,
        check_zn_overlap,
    ),
]

CASES_BY_ID: Dict[str, TheoremCase] = {case.id: case for case in CASES}

# Known discrepancies between a claim as stated and the computed graphs.
EXPECTED_MISMATCH_CASES = ("girth-path-shape", "class1-premise")

# Every claim about nil clean graphs and the cases that check it.
CLAIM_COVERAGE: List[Tuple[str, Tuple[str, ...]]] = [
    ("G_N(R) is complete iff R is nil clean", ("complete-iff-nilclean",)),
    ("cosets of nil(R) adjacent in the quotient are adjacent elementwise", ("adjacency-lifting", "idempotent-lifting")),
    ("degree of x is |NC| - 1 or |NC| by whether 2x is nil clean", ("degree-lemma",)),
    ("G_N(R) need not be connected", ("field-disconnected",)),
    ("G_N(Z_n) has a Hamiltonian path and is connected", ("zn-connected",)),
    ("G_N(M_d(Z_m)) is connected via explicit paths to 0", ("matrix-connected",)),
    ("reduced with trivial idempotents iff finite field", ("lemma-field",)),
    ("girth trichotomy", ("girth-nonfield", "girth-gf-odd", "girth-infinite", "girth-path-shape", "gf-census")),
    ("G_N(R) is not cyclic", ("not-cyclic",)),
    ("bipartite iff field", ("bipartite-iff-field",)),
    ("{1, 2} dominates for weak nil clean rings with trivial idempotents", ("dominating-pair-trivial-idem",)),
    ("{(1, 1), (2, 2)} dominates the product", ("dominating-product",)),
    ("{1, 2} dominates for weak nil clean rings", ("dominating-pair",)),
    ("G_N(R) is of class 1", ("class1", "class1-premise")),
    ("diameter 1 iff nil clean", ("diam-nilclean", "dominating-nilclean")),
    ("diameter 2 for weak nil clean rings with trivial idempotents", ("diam-wnc-trivial-idem",)),
    ("diameter 2 for nil clean x weak nil clean products", ("diam-product",)),
    ("diameter 2 for weak nil clean, not nil clean rings", ("diam-wnc",)),
    (
        "diameter of G_N(Z_n) by the shape of n",
        ("diam-zn-2k", "diam-zn-2k3l", "diam-zn-prime", "diam-zn-2p", "diam-zn-3p", "diam-zn-overlap"),
    ),
]


def select_cases(ids) -> List[TheoremCase]:
    """Cases by id; None or "all" selects every case.

    Raises:
        KeyError: For an unknown id.
    """
    if ids is None or ids == "all" or ids == ["all"]:
        return list(CASES)
    if isinstance(ids, str):
        ids = [i.strip() for i in ids.split(",") if i.strip()]
    unknown = [i for i in ids if i not in CASES_BY_ID]
    if unknown:
        raise KeyError(f"unknown case id(s): {', '.join(unknown)}")
    return [CASES_BY_ID[i] for i in ids]