from typing import List, Sequence

import numpy as np

from .finite_ring import FiniteRing
from .ring_spec import ProductSpec


class ProductRing(FiniteRing):
    """Direct product of rings with componentwise operations.

    Carrier indices are mixed-radix numbers with the first factor most
    significant, so (a, b) in A x B has index a * |B| + b.
    """

    def __init__(self, factors: Sequence[FiniteRing], spec: ProductSpec = None):
        self.factors: List[FiniteRing] = list(factors)
        if spec is None:
            spec = ProductSpec(tuple(f.spec for f in self.factors))
        self._radices = [f.order for f in self.factors]
        order = int(np.prod(self._radices))
        super().__init__(
            spec,
            order=order,
            zero=self.combine([f.zero for f in self.factors]),
            one=self.combine([f.one for f in self.factors]),
            commutative=all(f.commutative for f in self.factors),
        )

    def split(self, x) -> list:
        """Component indices of x, first factor first."""
        parts = []
        for radix in reversed(self._radices):
            x, r = np.divmod(x, radix)
            parts.append(r)
        return parts[::-1]

    def combine(self, parts) -> int:
        value = 0
        for part, radix in zip(parts, self._radices):
            value = value * radix + part
        return value

    def _componentwise(self, op, a, b):
        pa, pb = self.split(a), self.split(b)
        return self.combine(
            [getattr(f, op)(x, y) for f, x, y in zip(self.factors, pa, pb)]
        )

    def add(self, a, b):
        return self._componentwise("add", a, b)

    def mul(self, a, b):
        return self._componentwise("mul", a, b)

    def neg(self, a):
        return self.combine([f.neg(x) for f, x in zip(self.factors, self.split(a))])

    def _element_label(self, x: int) -> str:
        parts = self.split(x)
        return "(" + ", ".join(f.label(p) for f, p in zip(self.factors, parts)) + ")"
