from .builder import build_ring, characteristic, check_ring_axioms, field_parameters
from .finite_ring import FiniteRing
from .galois import GaloisFieldRing
from .matrix import MatrixRing
from .modular import ZnRing
from .product import ProductRing
from .quotient import CosetMap, QuotientRing, build_quotient_by_nilradical
from .ring_spec import (
    GFSpec,
    MatrixSpec,
    ProductSpec,
    QuotientSpec,
    RingSpec,
    ZnSpec,
    format_spec,
    parse_spec,
    spec_order,
    split_spec_list,
)
