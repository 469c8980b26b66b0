"""
Finite fields GF(p^k) = Z_p[x] / <f(x)>.

The carrier index of a residue c_0 + c_1 x + ... + c_{k-1} x^{k-1} is the
base-p number with c_0 as least significant digit. Addition works digit-wise;
multiplication goes through exp/log tables over a primitive element, built
once with sympy polynomial arithmetic.
"""

import numpy as np

from .finite_ring import FiniteRing
from .polynomials import default_modulus, int_to_digits, digits_to_int, mulmod
from .ring_spec import GFSpec

ALPHA = "α"


class GaloisFieldRing(FiniteRing):
    """GF(p^k) with element labels in the α-notation (e.g. "4+3α").

    Attributes:
        p (int): Characteristic.
        k (int): Degree over Z_p.
        modulus (tuple): Constant-first coefficients of the defining polynomial.
        generator (int): Carrier index of the primitive element used for logs.
    """

    def __init__(self, spec: GFSpec):
        order = spec.p**spec.k
        super().__init__(spec, order=order, zero=0, one=1, commutative=True)
        self.p = spec.p
        self.k = spec.k
        self.modulus = spec.poly if spec.poly is not None else default_modulus(self.p, self.k)

        self._weights = self.p ** np.arange(self.k, dtype=np.int64)
        self._digits = (self.elements[:, None] // self._weights[None, :]) % self.p
        self._neg = ((-self._digits) % self.p) @ self._weights
        self.generator, self._exp, self._log = self._build_log_tables()

    def _mul_scalar(self, a: int, b: int) -> int:
        product = mulmod(
            int_to_digits(a, self.p, self.k),
            int_to_digits(b, self.p, self.k),
            self.modulus,
            self.p,
        )
        return digits_to_int(product, self.p)

    def _build_log_tables(self):
        q1 = self.order - 1
        for g in range(1, self.order):
            powers = [1]
            x = g
            while x != 1 and len(powers) <= q1:
                powers.append(x)
                x = self._mul_scalar(x, g)
            if len(powers) == q1:
                exp = np.array(powers, dtype=np.int64)
                log = np.zeros(self.order, dtype=np.int64)
                log[exp] = np.arange(q1, dtype=np.int64)
                return g, exp, log
        raise ArithmeticError(f"{self.name}: no primitive element, modulus is not irreducible")

    def add(self, a, b):
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._weights

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        q1 = self.order - 1
        product = self._exp[(self._log[a] + self._log[b]) % q1]
        return np.where((a == 0) | (b == 0), 0, product)[()]

    def digits(self, x) -> tuple:
        return tuple(int(d) for d in self._digits[int(x)])

    def _element_label(self, x: int) -> str:
        terms = []
        for i, c in enumerate(self.digits(x)):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            power = ALPHA if i == 1 else f"{ALPHA}^{i}"
            terms.append(power if c == 1 else f"{c}{power}")
        return "+".join(terms) if terms else "0"
