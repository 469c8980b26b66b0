import numpy as np
import pytest

from nil_graph.config.config_loader import get_default_families
from nil_graph.errors import NonCommutativeRingError, RingAxiomError
from nil_graph.harness.families import family_specs
from nil_graph.rings import (
    ZnRing,
    ZnSpec,
    build_quotient_by_nilradical,
    build_ring,
    characteristic,
    check_ring_axioms,
    field_parameters,
)
from nil_graph.rings.polynomials import default_modulus, is_irreducible
from nil_graph.rings.ring_spec import parse_spec, spec_order


@pytest.mark.parametrize(
    "spec",
    ["Z2", "Z6", "Z12", "GF(2,2)", "GF(2,3)", "GF(3,2)", "GF(5,2)", "Z4xZ3", "Z2xZ2xZ2", "M2(Z2)", "Q(Z12)"],
)
def test_ring_axioms_hold_exhaustively(spec):
    check_ring_axioms(build_ring(spec))


FAMILY_RINGS_UP_TO_256 = [
    spec for spec in family_specs(get_default_families()) if spec_order(parse_spec(spec)) <= 256
]


@pytest.mark.slow
@pytest.mark.parametrize("spec", FAMILY_RINGS_UP_TO_256)
def test_family_rings_satisfy_axioms_exhaustively(spec):
    ring = build_ring(spec, validate=True)
    if ring.commutative:
        quotient, coset_map = build_quotient_by_nilradical(ring)
        check_ring_axioms(quotient, exhaustive_limit=256)
        coset_map.check_homomorphism(ring, quotient)


def test_family_sweep_covers_every_kind():
    assert {"Z2", "Z200", "GF(2,8)", "GF(3,5)", "M2(Z2)", "M2(Z3)", "Z2xZ2xZ2", "Q(Z12)"} <= set(FAMILY_RINGS_UP_TO_256)
    assert "GF(7,3)" not in FAMILY_RINGS_UP_TO_256


def test_ring_axioms_sampled_above_limit():
    check_ring_axioms(build_ring("M2(Z3)"), exhaustive_limit=16, samples=2000)


class _ShiftedZn(ZnRing):
    def mul(self, a, b):
        return (a * b + 1) % self.n


def test_broken_ring_is_caught():
    with pytest.raises(RingAxiomError) as info:
        check_ring_axioms(_ShiftedZn(ZnSpec(5)))
    assert "identity" in info.value.law


def test_zn_basics():
    r = build_ring("Z6")
    assert (r.order, r.zero, r.one) == (6, 0, 1)
    assert r.commutative
    assert int(r.add(4, 5)) == 3
    assert int(r.mul(4, 5)) == 2
    assert int(r.neg(1)) == 5
    assert r.labels == ["0", "1", "2", "3", "4", "5"]
    assert list(r.mul_row(2)) == [0, 2, 4, 0, 2, 4]


def test_gf4_multiplication():
    r = build_ring("GF(2,2)")
    assert r.labels == ["0", "1", "α", "1+α"]
    assert int(r.mul(2, 2)) == 3
    assert int(r.mul(2, 3)) == 1
    assert int(r.add(2, 3)) == 1


def test_gf25_default_and_override_moduli():
    assert default_modulus(5, 2) == (2, 0, 1)
    assert is_irreducible((1, 1, 1), 5)
    assert not is_irreducible((1, 0, 1), 5)

    default = build_ring("GF(5,2)")
    assert default.modulus == (2, 0, 1)
    assert default.label(19) == "4+3α"
    assert default.label(5) == "α"

    override = build_ring("GF(5,2;[1,1,1])")
    alpha = override.index_of("α")
    # α^2 = -α - 1 = 4 + 4α
    assert override.label(override.mul(alpha, alpha)) == "4+4α"


def test_every_nonzero_gf_element_is_invertible():
    r = build_ring("GF(3,3)")
    for x in range(1, r.order):
        assert (r.mul_row(x) == r.one).sum() == 1


def test_product_ring_indexing():
    r = build_ring("Z4xZ3")
    assert r.order == 12
    assert r.label(5) == "(1, 2)"
    assert r.combine([1, 2]) == 5
    assert [int(p) for p in r.split(5)] == [1, 2]
    assert r.one == r.combine([1, 1])
    assert int(r.mul(5, 5)) == r.combine([1, 1])


def test_matrix_ring_indexing():
    r = build_ring("M2(Z2)")
    assert r.order == 16
    assert not r.commutative
    assert r.from_rows([[1, 1], [0, 1]]) == 13
    assert r.one == 9
    assert r.label(13) == "[[1,1],[0,1]]"
    e12, e21 = r.from_rows([[0, 1], [0, 0]]), r.from_rows([[0, 0], [1, 0]])
    assert int(r.mul(e12, e21)) != int(r.mul(e21, e12))


def test_quotient_by_nilradical():
    z12 = build_ring("Z12")
    quotient, coset_map = build_quotient_by_nilradical(z12)
    assert quotient.order == 6
    assert list(coset_map.section) == [0, 1, 2, 3, 4, 5]
    assert list(coset_map.coset(1)) == [1, 7]
    assert quotient.label(5) == "[5]"
    assert int(np.count_nonzero(quotient.nilpotent_mask)) == 1
    coset_map.check_homomorphism(z12, quotient)


@pytest.mark.parametrize("spec, order", [("Z6", 6), ("GF(5,2)", 25), ("Z8", 2), ("Z4xZ9", 6)])
def test_quotient_order(spec, order):
    r = build_ring(spec)
    quotient, coset_map = build_quotient_by_nilradical(r)
    assert quotient.order == order
    assert quotient.order * int(np.count_nonzero(r.nilpotent_mask)) == r.order
    coset_map.check_homomorphism(r, quotient)


def test_quotient_needs_commutative_ring():
    with pytest.raises(NonCommutativeRingError):
        build_quotient_by_nilradical(build_ring("M2(Z2)"))


@pytest.mark.parametrize("spec, expected", [("Z6", 6), ("GF(5,2)", 5), ("Z4xZ3", 12), ("M2(Z3)", 3)])
def test_characteristic(spec, expected):
    assert characteristic(build_ring(spec)) == expected


def test_field_parameters():
    assert field_parameters(build_ring("GF(5,2)")) == (5, 2)
    assert field_parameters(build_ring("Z7")) == (7, 1)
    assert field_parameters(build_ring("Z2xZ2")) == (2, 2)


@pytest.mark.parametrize("spec", ["Z6", "Z4", "Z9", "Z12", "Z4xZ3"])
def test_field_parameters_need_a_prime_characteristic(spec):
    assert field_parameters(build_ring(spec)) is None


def test_tables_and_structural_ops_agree(monkeypatch):
    tabled = build_ring("Z4xZ3")
    assert tabled._tables is not None
    monkeypatch.setattr("nil_graph.rings.finite_ring.get_table_limit", lambda: 0)
    structural = build_ring("Z4xZ3")
    for a in range(12):
        assert list(tabled.add_row(a)) == list(structural.add_row(a))
        assert list(tabled.mul_row(a)) == list(structural.mul_row(a))
