from typing import List, Sequence

import numpy as np

from .finite_ring import FiniteRing
from .ring_spec import MatrixSpec


class MatrixRing(FiniteRing):
    """d x d matrices over Z_m.

    Carrier indices read the entries row-major as base-m digits, entry (0, 0)
    most significant, so [[1,1],[0,1]] over Z_2 is 0b1101 = 13. Noncommutative
    for d >= 2.
    """

    def __init__(self, spec: MatrixSpec):
        self.m = spec.base.n
        self.dim = spec.dim
        cells = self.dim * self.dim
        self._weights = self.m ** np.arange(cells - 1, -1, -1, dtype=np.int64)
        identity = np.eye(self.dim, dtype=np.int64)
        super().__init__(
            spec,
            order=self.m**cells,
            zero=0,
            one=int(self._encode(identity)),
            commutative=self.dim == 1,
        )

    def _decode(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        digits = (x[..., None] // self._weights) % self.m
        return digits.reshape(x.shape + (self.dim, self.dim))

    def _encode(self, matrices: np.ndarray):
        flat = matrices.reshape(matrices.shape[:-2] + (self.dim * self.dim,))
        return (flat % self.m) @ self._weights

    def add(self, a, b):
        return self._encode(self._decode(a) + self._decode(b))

    def mul(self, a, b):
        return self._encode(np.matmul(self._decode(a), self._decode(b)))

    def neg(self, a):
        return self._encode(-self._decode(a))

    def to_rows(self, x) -> List[List[int]]:
        return [[int(v) for v in row] for row in self._decode(int(x))]

    def from_rows(self, rows: Sequence[Sequence[int]]) -> int:
        return int(self._encode(np.array(rows, dtype=np.int64)))

    def _element_label(self, x: int) -> str:
        rows = self.to_rows(x)
        return "[" + ",".join("[" + ",".join(str(v) for v in row) + "]" for row in rows) + "]"
