"""
Uniform carrier-indexed interface shared by every finite ring.

Elements are the integers 0..order-1. add/mul/neg accept plain ints or
integer numpy arrays and broadcast like numpy ufuncs, so whole rows of the
Cayley tables come out of one call. Rings are immutable after construction.
"""

from functools import cached_property
from typing import List, Optional

import numpy as np

from ..config.config_loader import get_table_limit
from .ring_spec import RingSpec, format_spec


class FiniteRing:
    """A finite ring with identity on the carrier 0..order-1.

    Subclasses implement add, mul, neg and _element_label.

    Attributes:
        spec (RingSpec): Specification the ring was built from.
        order (int): Number of elements.
        zero (int): Carrier index of the additive identity.
        one (int): Carrier index of the multiplicative identity.
        commutative (bool): Whether multiplication commutes.
    """

    def __init__(self, spec: RingSpec, order: int, zero: int, one: int, commutative: bool):
        self.spec = spec
        self.order = int(order)
        self.zero = int(zero)
        self.one = int(one)
        self.commutative = bool(commutative)

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _element_label(self, x: int) -> str:
        raise NotImplementedError

    @property
    def name(self) -> str:
        return format_spec(self.spec)

    @cached_property
    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    @cached_property
    def labels(self) -> List[str]:
        return [self._element_label(x) for x in range(self.order)]

    def label(self, x) -> str:
        return self.labels[int(x)]

    def index_of(self, label: str) -> int:
        """Carrier index of the element displayed as *label*."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"{label!r} is not an element of {self.name}")

    def add_row(self, a) -> np.ndarray:
        """a + x for every element x, as an int64 vector."""
        table = self._tables
        if table is not None:
            return table[0][int(a)]
        return np.asarray(self.add(int(a), self.elements), dtype=np.int64)

    def mul_row(self, a) -> np.ndarray:
        """a * x for every element x."""
        table = self._tables
        if table is not None:
            return table[1][int(a)]
        return np.asarray(self.mul(int(a), self.elements), dtype=np.int64)

    @cached_property
    def _tables(self) -> Optional[tuple]:
        # memoized Cayley tables for small rings only
        if self.order > get_table_limit():
            return None
        x = self.elements[:, None]
        y = self.elements[None, :]
        add_table = np.asarray(self.add(x, y), dtype=np.int64)
        mul_table = np.asarray(self.mul(x, y), dtype=np.int64)
        return add_table, mul_table

    @cached_property
    def idempotent_mask(self) -> np.ndarray:
        return np.asarray(self.mul(self.elements, self.elements)) == self.elements

    @cached_property
    def nilpotent_mask(self) -> np.ndarray:
        """x is nilpotent iff x^(2^j) = 0 once 2^j >= order.

        The nilpotency index never exceeds the order, so squaring
        ceil(log2(order)) times settles every element at once.
        """
        powers = self.elements
        for _ in range(max(1, (self.order - 1).bit_length())):
            powers = np.asarray(self.mul(powers, powers))
        return powers == self.zero

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} order={self.order}>"
