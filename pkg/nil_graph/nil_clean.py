"""
Idempotents, nilpotents and nil clean elements of a finite ring.

An element is nil clean when it is e + n for an idempotent e and a
nilpotent n; NC(R) is the set of such elements. A ring is nil clean when
NC(R) is everything, and weak nil clean when every element is n + e or n - e.
For noncommutative rings the same definitions are used with no requirement
that e and n commute.
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from .errors import NonCommutativeRingError
from .rings.finite_ring import FiniteRing
from .rings.quotient import build_quotient_by_nilradical
from .utils.bitset import ElementSet


@dataclass
class NilCleanProfile:
    """Everything the graph theorems ask about a ring's nil clean structure.

    Attributes:
        idempotents (ElementSet): {e : e*e = e}.
        nilpotents (ElementSet): {n : n^m = 0 for some m}.
        nilclean (ElementSet): NC(R).
        is_nil_clean_ring (bool): NC(R) is the whole carrier.
        is_weak_nil_clean_ring (bool): every element is n + e or n - e.
        is_field (bool): every nonzero element is a unit.
        witness (dict): element -> (e, n), the first decomposition in
            (e, n) carrier order.
    """

    idempotents: ElementSet
    nilpotents: ElementSet
    nilclean: ElementSet
    is_nil_clean_ring: bool
    is_weak_nil_clean_ring: bool
    is_field: bool
    witness: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    @property
    def has_trivial_idempotents(self) -> bool:
        return len(self.idempotents) == 2

    @property
    def is_reduced(self) -> bool:
        return len(self.nilpotents) == 1


def idempotents(r: FiniteRing) -> ElementSet:
    return ElementSet.from_mask(r.idempotent_mask)


def nilpotents(r: FiniteRing) -> ElementSet:
    return ElementSet.from_mask(r.nilpotent_mask)


def nilradical(r: FiniteRing) -> ElementSet:
    """nil(R); only an ideal, and so only called that, when R commutes."""
    if not r.commutative:
        raise NonCommutativeRingError(f"{r.name}: the nilradical needs a commutative ring")
    return nilpotents(r)


def nil_clean_decomposition(r: FiniteRing) -> Tuple[ElementSet, Dict[int, Tuple[int, int]]]:
    """NC(R) together with a witness (e, n) for each member.

    Idempotents are taken in increasing order and, for each, nilpotents in
    increasing order; the first pair reaching an element is its witness.
    """
    idem = np.flatnonzero(r.idempotent_mask)
    nil = np.flatnonzero(r.nilpotent_mask)
    witness_e = np.full(r.order, -1, dtype=np.int64)
    witness_n = np.full(r.order, -1, dtype=np.int64)
    for e in idem:
        # n -> e + n is injective, so one row never hits an element twice
        sums = np.asarray(r.add(int(e), nil), dtype=np.int64)
        fresh = witness_e[sums] < 0
        witness_e[sums[fresh]] = e
        witness_n[sums[fresh]] = nil[fresh]
    members = witness_e >= 0
    witness = {
        int(x): (int(witness_e[x]), int(witness_n[x])) for x in np.flatnonzero(members)
    }
    return ElementSet.from_mask(members), witness


def nil_clean_set(r: FiniteRing) -> ElementSet:
    return nil_clean_decomposition(r)[0]


def is_weak_nil_clean(r: FiniteRing) -> bool:
    """Every element is n + e or n - e for an idempotent e and nilpotent n."""
    covered = np.zeros(r.order, dtype=bool)
    nil = np.flatnonzero(r.nilpotent_mask)
    for e in np.flatnonzero(r.idempotent_mask):
        covered[np.asarray(r.add(nil, int(e)))] = True
        covered[np.asarray(r.sub(nil, int(e)))] = True
        if covered.all():
            return True
    return bool(covered.all())


def unit_mask(r: FiniteRing) -> np.ndarray:
    """x is a unit iff some y has x*y = y*x = 1."""
    units = np.zeros(r.order, dtype=bool)
    for x in range(r.order):
        right = r.mul_row(x) == r.one
        if not right.any():
            continue
        if r.commutative:
            units[x] = True
        else:
            left = np.asarray(r.mul(r.elements, x)) == r.one
            units[x] = bool((right & left).any())
    return units


def is_field(r: FiniteRing) -> bool:
    """Every nonzero element is a unit (a finite division ring is a field)."""
    units = unit_mask(r)
    units[r.zero] = True
    return bool(units.all()) and r.order > 1


def idempotent_lifting_check(r: FiniteRing) -> bool:
    """Every idempotent of R/nil(R) is the image of an idempotent of R.

    Raises:
        NonCommutativeRingError: If r is not commutative.
    """
    quotient, coset_map = build_quotient_by_nilradical(r)
    lifted = np.zeros(quotient.order, dtype=bool)
    lifted[coset_map.projection[np.flatnonzero(r.idempotent_mask)]] = True
    return bool(np.all(lifted[quotient.idempotent_mask]))


def doubles_all_nil_clean(r: FiniteRing, nilclean: ElementSet = None) -> bool:
    """Whether 2x is nil clean for every x, i.e. every vertex has degree |NC| - 1."""
    if nilclean is None:
        nilclean = nil_clean_set(r)
    doubles = np.asarray(r.add(r.elements, r.elements))
    return bool(nilclean.mask()[doubles].all())


def nilclean_profile(r: FiniteRing) -> NilCleanProfile:
    nilclean, witness = nil_clean_decomposition(r)
    return NilCleanProfile(
        idempotents=idempotents(r),
        nilpotents=nilpotents(r),
        nilclean=nilclean,
        is_nil_clean_ring=nilclean.is_full(),
        is_weak_nil_clean_ring=is_weak_nil_clean(r),
        is_field=is_field(r),
        witness=witness,
    )


def profile_to_dict(r: FiniteRing, profile: NilCleanProfile) -> dict:
    """JSON-ready profile: sets as sorted index arrays plus their labels."""

    def element_set(s: ElementSet) -> dict:
        members = s.indices()
        return {"indices": members, "labels": [r.label(x) for x in members]}

    return {
        "ring": r.name,
        "order": r.order,
        "commutative": r.commutative,
        "idempotents": element_set(profile.idempotents),
        "nilpotents": element_set(profile.nilpotents),
        "nilclean": element_set(profile.nilclean),
        "is_nil_clean_ring": profile.is_nil_clean_ring,
        "is_weak_nil_clean_ring": profile.is_weak_nil_clean_ring,
        "is_field": profile.is_field,
        "witness": {
            r.label(x): [r.label(e), r.label(n)] for x, (e, n) in sorted(profile.witness.items())
        },
    }
