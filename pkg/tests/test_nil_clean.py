import pytest

from nil_graph.errors import NonCommutativeRingError
from nil_graph.nil_clean import (
    doubles_all_nil_clean,
    idempotent_lifting_check,
    idempotents,
    is_field,
    is_weak_nil_clean,
    nil_clean_decomposition,
    nil_clean_set,
    nilclean_profile,
    nilpotents,
    nilradical,
    profile_to_dict,
)
from nil_graph.rings import build_ring


def test_z6_sets():
    r = build_ring("Z6")
    assert idempotents(r).indices() == [0, 1, 3, 4]
    assert nilpotents(r).indices() == [0]
    assert nil_clean_set(r).indices() == [0, 1, 3, 4]


def test_z12_sets():
    r = build_ring("Z12")
    assert idempotents(r).indices() == [0, 1, 4, 9]
    assert nilradical(r).indices() == [0, 6]
    assert nil_clean_set(r).indices() == [0, 1, 3, 4, 6, 7, 9, 10]


def test_gf25_nil_clean_set_is_zero_and_one():
    assert nil_clean_set(build_ring("GF(5,2)")).indices() == [0, 1]


def test_witnesses_are_decompositions():
    r = build_ring("Z12")
    members, witness = nil_clean_decomposition(r)
    assert sorted(witness) == members.indices()
    for x, (e, n) in witness.items():
        assert e in idempotents(r) and n in nilpotents(r)
        assert int(r.add(e, n)) == x
    assert nil_clean_decomposition(build_ring("Z4"))[1][3] == (1, 2)


@pytest.mark.parametrize(
    "spec, nil_clean, weak",
    [
        ("Z2", True, True),
        ("Z3", False, True),
        ("Z4", True, True),
        ("Z5", False, False),
        ("Z6", False, True),
        ("Z9", False, True),
        ("GF(2,2)", False, False),
        ("Z3xZ3", False, False),
        ("M2(Z2)", True, True),
    ],
)
def test_ring_classes(spec, nil_clean, weak):
    profile = nilclean_profile(build_ring(spec))
    assert profile.is_nil_clean_ring == nil_clean
    assert profile.is_weak_nil_clean_ring == weak
    assert is_weak_nil_clean(build_ring(spec)) == weak


@pytest.mark.parametrize(
    "spec, expected",
    [("Z5", True), ("GF(2,2)", True), ("GF(5,2)", True), ("Z6", False), ("Z9", False), ("M2(Z2)", False)],
)
def test_is_field(spec, expected):
    assert is_field(build_ring(spec)) == expected


def test_profile_flags():
    profile = nilclean_profile(build_ring("Z9"))
    assert profile.has_trivial_idempotents
    assert not profile.is_reduced
    profile = nilclean_profile(build_ring("Z6"))
    assert not profile.has_trivial_idempotents
    assert profile.is_reduced


@pytest.mark.parametrize("a, b", [("Z4", "Z3"), ("Z2", "Z9"), ("Z8", "Z3"), ("Z2", "Z2"), ("Z3", "Z5")])
def test_product_profiles_follow_factors(a, b):
    pa, pb = nilclean_profile(build_ring(a)), nilclean_profile(build_ring(b))
    product = nilclean_profile(build_ring(f"{a}x{b}"))
    assert len(product.idempotents) == len(pa.idempotents) * len(pb.idempotents)
    assert len(product.nilpotents) == len(pa.nilpotents) * len(pb.nilpotents)
    assert len(product.nilclean) == len(pa.nilclean) * len(pb.nilclean)
    assert product.is_nil_clean_ring == (pa.is_nil_clean_ring and pb.is_nil_clean_ring)


@pytest.mark.parametrize("spec", ["Z12", "Z8", "Z4xZ9", "Z18"])
def test_idempotents_lift(spec):
    assert idempotent_lifting_check(build_ring(spec))


def test_nilradical_needs_commutative_ring():
    with pytest.raises(NonCommutativeRingError):
        nilradical(build_ring("M2(Z2)"))


def test_doubles_all_nil_clean():
    assert doubles_all_nil_clean(build_ring("Z4"))
    assert doubles_all_nil_clean(build_ring("GF(2,2)"))
    assert not doubles_all_nil_clean(build_ring("Z6"))


def test_profile_to_dict_uses_labels():
    r = build_ring("GF(3,2)")
    data = profile_to_dict(r, nilclean_profile(r))
    assert data["ring"] == "GF(3,2)"
    assert data["nilclean"] == {"indices": [0, 1], "labels": ["0", "1"]}
    assert data["is_field"] is True
    assert data["witness"]["1"] == ["1", "0"]
