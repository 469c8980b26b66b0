"""
Ring construction from specs, ring axiom checks and the characteristic.
"""

from typing import Optional, Tuple, Union

import numpy as np
from sympy import isprime

from ..config.config_loader import get_axiom_exhaustive_limit
from ..errors import RingAxiomError
from .finite_ring import FiniteRing
from .galois import GaloisFieldRing
from .matrix import MatrixRing
from .modular import ZnRing
from .product import ProductRing
from .quotient import QuotientRing
from .ring_spec import (
    GFSpec,
    MatrixSpec,
    ProductSpec,
    QuotientSpec,
    RingSpec,
    ZnSpec,
    parse_spec,
)


def build_ring(spec: Union[RingSpec, str], validate: bool = False) -> FiniteRing:
    """Construct the ring a spec describes.

    Args:
        spec: A RingSpec or its text form ("Z6", "GF(5,2)", ...).
        validate: Run check_ring_axioms on the result before returning.

    Returns:
        FiniteRing: The constructed ring.

    Raises:
        RingSpecError: The spec text or its parameters are invalid.
        NonCommutativeRingError: Q(...) over a noncommutative base.
    """
    if isinstance(spec, str):
        spec = parse_spec(spec)

    if isinstance(spec, ZnSpec):
        ring = ZnRing(spec)
    elif isinstance(spec, GFSpec):
        ring = GaloisFieldRing(spec)
    elif isinstance(spec, ProductSpec):
        ring = ProductRing([build_ring(f) for f in spec.factors], spec)
    elif isinstance(spec, MatrixSpec):
        ring = MatrixRing(spec)
    elif isinstance(spec, QuotientSpec):
        ring = QuotientRing(build_ring(spec.base), spec)
    else:
        raise TypeError(f"not a ring spec: {spec!r}")

    if validate:
        check_ring_axioms(ring)
    return ring


def characteristic(ring: FiniteRing) -> int:
    """Smallest m >= 1 with m * 1 = 0."""
    m, x = 1, ring.one
    while x != ring.zero:
        x = int(ring.add(x, ring.one))
        m += 1
    return m


def field_parameters(ring: FiniteRing) -> Optional[Tuple[int, int]]:
    """(p, k) with order = p^k and p the characteristic, or None.

    None whenever the characteristic is not prime, as for Z6 or Z9.
    """
    p = characteristic(ring)
    if not isprime(p):
        return None
    k, size = 0, 1
    while size < ring.order:
        size *= p
        k += 1
    return (p, k) if size == ring.order else None


def _first_violation(lhs, rhs) -> Optional[tuple]:
    bad = np.argwhere(np.asarray(lhs) != np.asarray(rhs))
    return tuple(bad[0]) if len(bad) else None


def _check_laws(ring: FiniteRing, a, y, z, witness):
    """Ring laws on broadcastable index arrays; *witness* maps a violation
    position back to the elements involved."""
    laws = (
        ("additive associativity", ring.add(ring.add(a, y), z), ring.add(a, ring.add(y, z))),
        ("multiplicative associativity", ring.mul(ring.mul(a, y), z), ring.mul(a, ring.mul(y, z))),
        ("left distributivity", ring.mul(a, ring.add(y, z)), ring.add(ring.mul(a, y), ring.mul(a, z))),
        ("right distributivity", ring.mul(ring.add(y, z), a), ring.add(ring.mul(y, a), ring.mul(z, a))),
    )
    for law, lhs, rhs in laws:
        position = _first_violation(lhs, rhs)
        if position is not None:
            raise RingAxiomError(law, witness(position))


def check_ring_axioms(ring: FiniteRing, exhaustive_limit: int = None, samples: int = 4096, seed: int = 0):
    """Check the ring axioms and the commutative flag.

    Rings up to *exhaustive_limit* elements are checked on every triple;
    larger rings on *samples* seeded random triples.

    Raises:
        RingAxiomError: With the violated law and a witness.
    """
    if exhaustive_limit is None:
        exhaustive_limit = get_axiom_exhaustive_limit()
    elements = ring.elements
    zero, one = ring.zero, ring.one

    for law, lhs, rhs in (
        ("additive identity", ring.add(zero, elements), elements),
        ("multiplicative identity (left)", ring.mul(one, elements), elements),
        ("multiplicative identity (right)", ring.mul(elements, one), elements),
        ("additive inverse", ring.add(elements, ring.neg(elements)), np.full(ring.order, zero)),
    ):
        position = _first_violation(lhs, rhs)
        if position is not None:
            raise RingAxiomError(law, position)

    if ring.order <= exhaustive_limit:
        x, y = elements[:, None], elements[None, :]
        position = _first_violation(ring.add(x, y), ring.add(y, x))
        if position is not None:
            raise RingAxiomError("additive commutativity", position)
        commutes = _first_violation(ring.mul(x, y), ring.mul(y, x)) is None
        if commutes != ring.commutative:
            raise RingAxiomError("commutative flag", (int(commutes),))
        for a in range(ring.order):
            _check_laws(ring, a, x, y, lambda pos, a=a: (a,) + pos)
        return

    rng = np.random.default_rng(seed)
    a, y, z = rng.integers(0, ring.order, size=(3, samples))
    position = _first_violation(ring.add(a, y), ring.add(y, a))
    if position is not None:
        raise RingAxiomError("additive commutativity", (a[position], y[position]))
    if ring.commutative:
        position = _first_violation(ring.mul(a, y), ring.mul(y, a))
        if position is not None:
            raise RingAxiomError("commutative flag", (a[position], y[position]))
    _check_laws(ring, a, y, z, lambda pos: (a[pos], y[pos], z[pos]))
