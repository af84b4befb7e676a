"""The grading group (Z2)^m: bit-vector elements, the standard scalar product,
and the standard ordering (even degrees first, each half lexicographic)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_ARITY = 16


@dataclass(frozen=True, order=False)
class GroupElement:
    """An element of (Z2)^m.

    Coordinates are stored in an integer mask; bit i holds coordinate i+1, so
    the leftmost printed coordinate is bit 0.  Addition is XOR and every
    element is its own inverse.
    """

    m: int
    mask: int = 0

    def __post_init__(self):
        if not 1 <= self.m <= MAX_ARITY:
            raise ValueError(f"group arity must be in 1..{MAX_ARITY}, got {self.m}")
        if not 0 <= self.mask < (1 << self.m):
            raise ValueError(f"mask {self.mask} out of range for arity {self.m}")

    @staticmethod
    def from_bits(bits) -> "GroupElement":
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("coordinates must be 0 or 1")
        mask = 0
        for i, b in enumerate(bits):
            mask |= b << i
        return GroupElement(len(bits), mask)

    def bits(self) -> tuple:
        return tuple((self.mask >> i) & 1 for i in range(self.m))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check_arity(other)
        return GroupElement(self.m, self.mask ^ other.mask)

    def pair(self, other: "GroupElement") -> int:
        """Standard scalar product <a,b> = sum_i a_i b_i mod 2."""
        self._check_arity(other)
        return (self.mask & other.mask).bit_count() & 1

    @property
    def parity(self) -> int:
        """<g,g>, i.e. 0 for even elements and 1 for odd ones."""
        return self.mask.bit_count() & 1

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    def _check_arity(self, other):
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected GroupElement, got {type(other).__name__}")
        if self.m != other.m:
            raise ValueError(f"group arity mismatch: {self.m} vs {other.m}")

    def __str__(self):
        return "(" + ",".join(str(b) for b in self.bits()) + ")"

    @staticmethod
    def zero(m: int) -> "GroupElement":
        return GroupElement(m, 0)


def scalar_product(a: GroupElement, b: GroupElement) -> int:
    """<a,b> over Z2; symmetric and bi-additive."""
    return a.pair(b)


@dataclass(frozen=True)
class StandardOrder:
    """All 2^m elements of (Z2)^m, even ones first, both halves lexicographic."""

    m: int
    elements: tuple

    def index(self, g: GroupElement) -> int:
        return self._index_map()[g.mask]

    @lru_cache(maxsize=None)
    def _index_map(self):
        return {g.mask: i for i, g in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]


@lru_cache(maxsize=None)
def standard_order(m: int) -> StandardOrder:
    """Deterministic standard order on (Z2)^m.

    The first 2^(m-1) entries are the even elements in lexicographic order
    (leftmost coordinate most significant), the last 2^(m-1) the odd ones.
    """
    if m < 1:
        raise ValueError("arity must be >= 1")
    everything = [GroupElement(m, mask) for mask in range(1 << m)]
    evens = sorted((g for g in everything if g.parity == 0), key=GroupElement.bits)
    odds = sorted((g for g in everything if g.parity == 1), key=GroupElement.bits)
    return StandardOrder(m, tuple(evens + odds))


def parity_split(order: StandardOrder):
    """Index ranges of the even and odd halves of a standard order."""
    half = len(order) // 2
    return tuple(range(half)), tuple(range(half, len(order)))
