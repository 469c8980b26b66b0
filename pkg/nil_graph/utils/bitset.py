"""
Bitset helpers.

Vertex and element sets are plain Python ints: bit i set means carrier index
i is a member. Unions and intersections are then single word-parallel
operations, and popcount is int.bit_count().
"""

from typing import Iterable, Iterator, List

import numpy as np


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of the set bits of *bits* in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_from_indices(indices: Iterable[int]) -> int:
    bits = 0
    for i in indices:
        bits |= 1 << int(i)
    return bits


def bits_from_mask(mask: np.ndarray) -> int:
    """Pack a boolean numpy vector into an int bitset (index 0 = bit 0)."""
    packed = np.packbits(np.asarray(mask, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def mask_from_bits(bits: int, size: int) -> np.ndarray:
    raw = bits.to_bytes((size + 7) // 8, "little")
    unpacked = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return unpacked[:size].astype(bool)


class ElementSet:
    """A subset of a ring's carrier, stored as an int bitset.

    Equality compares both the members and the carrier size, so sets over
    different rings never compare equal by accident.
    """

    __slots__ = ("bits", "order")

    def __init__(self, bits: int, order: int):
        self.bits = bits
        self.order = order

    @classmethod
    def from_indices(cls, indices: Iterable[int], order: int) -> "ElementSet":
        return cls(bits_from_indices(indices), order)

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "ElementSet":
        return cls(bits_from_mask(mask), len(mask))

    def indices(self) -> List[int]:
        return list(iter_bits(self.bits))

    def mask(self) -> np.ndarray:
        return mask_from_bits(self.bits, self.order)

    def is_full(self) -> bool:
        return self.bits == (1 << self.order) - 1

    def issubset(self, other: "ElementSet") -> bool:
        return self.bits & ~other.bits == 0

    def __contains__(self, x) -> bool:
        return bool(self.bits >> int(x) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.bits | other.bits, self.order)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.bits & other.bits, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.bits == other.bits and self.order == other.order

    def __hash__(self):
        return hash((self.bits, self.order))

    def __repr__(self):
        return f"ElementSet({self.indices()}, order={self.order})"
