"""
Polynomials over Z_p.

Polynomials are tuples of coefficients with the constant term first, which
is also the digit order of GF(p^k) carrier indices. Arithmetic is delegated
to sympy's dense galoistools, which wants the highest degree first.
"""

from itertools import product as cartesian
from typing import List, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_mul, gf_rem, gf_strip


def to_dense(coeffs: Sequence[int]) -> List[int]:
    """Constant-first coefficients -> sympy dense list (leading term first)."""
    return gf_strip([ZZ(int(c)) for c in reversed(coeffs)])


def from_dense(dense: Sequence[int], length: int) -> Tuple[int, ...]:
    coeffs = [int(c) for c in reversed(dense)]
    return tuple(coeffs + [0] * (length - len(coeffs)))


def int_to_digits(value: int, p: int, length: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(length):
        value, d = divmod(value, p)
        digits.append(d)
    return tuple(digits)


def digits_to_int(digits: Sequence[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + int(d)
    return value


def monic_polynomials(p: int, degree: int):
    """Yield every monic polynomial of *degree* in canonical order."""
    for lower in cartesian(range(p), repeat=degree):
        # cartesian varies the last position fastest; reverse so the constant
        # term is the least significant digit
        yield tuple(reversed(lower)) + (1,)


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Irreducibility over Z_p by exhaustive trial division.

    Every monic divisor of degree 1..deg/2 is tried, so the check is exact
    without relying on a probabilistic test.
    """
    f = to_dense(coeffs)
    degree = len(f) - 1
    if degree < 1:
        return False
    for d in range(1, degree // 2 + 1):
        for g in monic_polynomials(p, d):
            if not gf_rem(f, to_dense(g), p, ZZ):
                return False
    return True


def default_modulus(p: int, k: int) -> Tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree k over Z_p.

    "Smallest" reads the coefficient tuple as a base-p number with the
    constant term least significant, the same order as carrier indices.
    """
    for value in range(p**k, 2 * p**k):
        coeffs = int_to_digits(value, p, k + 1)
        if is_irreducible(coeffs, p):
            return coeffs
    raise ValueError(f"no irreducible polynomial of degree {k} over Z_{p}")


def mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int):
    """Product of two residues modulo *modulus*, as a constant-first tuple."""
    k = len(modulus) - 1
    product = gf_mul(to_dense(a), to_dense(b), p, ZZ)
    return from_dense(gf_rem(product, to_dense(modulus), p, ZZ), k)

