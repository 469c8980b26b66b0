from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import NonCommutativeRingError, RingAxiomError
from .finite_ring import FiniteRing
from .ring_spec import QuotientSpec


@dataclass(frozen=True, eq=False)
class CosetMap:
    """Projection R -> R/nil(R) together with one representative per coset.

    Attributes:
        projection (np.ndarray): projection[x] = coset index of x.
        section (np.ndarray): section[c] = smallest element of coset c.
    """

    projection: np.ndarray
    section: np.ndarray

    def coset(self, c: int) -> np.ndarray:
        return np.flatnonzero(self.projection == c)

    def check_homomorphism(self, base: FiniteRing, quotient: FiniteRing):
        """Exhaustively check that the projection is a surjective ring map."""
        if len(np.unique(self.projection)) != quotient.order:
            raise RingAxiomError("projection surjectivity", (quotient.order,))
        x = base.elements[:, None]
        y = base.elements[None, :]
        p = self.projection
        for law, lhs, rhs in (
            ("projection preserves +", p[base.add(x, y)], quotient.add(p[x], p[y])),
            ("projection preserves *", p[base.mul(x, y)], quotient.mul(p[x], p[y])),
        ):
            bad = np.argwhere(np.asarray(lhs) != np.asarray(rhs))
            if len(bad):
                raise RingAxiomError(law, tuple(bad[0]))
        if not np.array_equal(p[self.section], np.arange(quotient.order)):
            raise RingAxiomError("section lands in its coset", (0,))


class QuotientRing(FiniteRing):
    """R / nil(R) for a commutative ring R.

    Cosets are numbered by their smallest element; each is labelled with
    that representative in brackets, e.g. "[5]" for 5 + nil(Z_12).
    """

    def __init__(self, base: FiniteRing, spec: QuotientSpec = None):
        if not base.commutative:
            raise NonCommutativeRingError(
                f"{base.name}: nilpotents form an ideal only in a commutative ring"
            )
        self.base = base
        nil = np.flatnonzero(base.nilpotent_mask)
        # every coset x + nil(R), reduced to its smallest member
        cosets = np.asarray(base.add(base.elements[:, None], nil[None, :]))
        representative = cosets.min(axis=1)
        section = np.unique(representative)
        projection = np.searchsorted(section, representative)
        self.coset_map = CosetMap(projection=projection, section=section)
        super().__init__(
            spec if spec is not None else QuotientSpec(base.spec),
            order=len(section),
            zero=projection[base.zero],
            one=projection[base.one],
            commutative=True,
        )

    def _lift(self, a):
        return self.coset_map.section[a]

    def add(self, a, b):
        return self.coset_map.projection[self.base.add(self._lift(a), self._lift(b))]

    def mul(self, a, b):
        return self.coset_map.projection[self.base.mul(self._lift(a), self._lift(b))]

    def neg(self, a):
        return self.coset_map.projection[self.base.neg(self._lift(a))]

    def _element_label(self, x: int) -> str:
        return f"[{self.base.label(self.coset_map.section[x])}]"


def build_quotient_by_nilradical(ring: FiniteRing) -> Tuple[FiniteRing, CosetMap]:
    """Quotient of a commutative ring by its nilradical, with the coset map.

    Raises:
        NonCommutativeRingError: If the ring is not commutative.
    """
    quotient = QuotientRing(ring)
    return quotient, quotient.coset_map
