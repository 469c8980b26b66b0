from .finite_ring import FiniteRing
from .ring_spec import ZnSpec


class ZnRing(FiniteRing):
    """Integers modulo n; carrier index = least non-negative residue."""

    def __init__(self, spec: ZnSpec):
        super().__init__(spec, order=spec.n, zero=0, one=1, commutative=True)
        self.n = spec.n

    def add(self, a, b):
        return (a + b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def _element_label(self, x: int) -> str:
        return str(x)
