"""Shared exact-arithmetic primitives: sets of integers/rationals, binomial
coefficients with the vanishing convention, and composition enumeration.

Everything here is arbitrary precision. No floats enter any code path.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

# Hard ceiling on how many composition vectors a single enumeration may
# materialize; protects careless CLI inputs from exhausting memory.
DEFAULT_COMPOSITION_CAP = 10_000_000


class CapExceeded(RuntimeError):
    """A configured enumeration or cardinality budget would be exceeded."""


class IntegerSet:
    """A finite set of integers, stored as a strictly increasing tuple.

    Input values are deduplicated and sorted, so the increasing invariant
    holds by construction.
    """

    __slots__ = ("elements",)

    def __init__(self, values: Iterable[int]):
        elems = tuple(sorted({int(v) for v in values}))
        if not elems:
            raise ValueError("IntegerSet needs at least one element")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def from_text(cls, text: str) -> "IntegerSet":
        """Parse a comma-separated list such as ``0,2,18,25``."""
        return cls(int(tok) for tok in text.split(","))

    @property
    def k(self) -> int:
        return len(self.elements)

    @property
    def diam(self) -> int:
        return self.elements[-1] - self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __contains__(self, value) -> bool:
        return value in self.elements

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerSet) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __setattr__(self, name, value):
        raise AttributeError("IntegerSet is immutable")

    def __repr__(self) -> str:
        return f"IntegerSet({list(self.elements)!r})"


class RationalSet:
    """A finite set of exact rationals, strictly increasing. Accepts ints,
    Fractions, and strings like ``1/2`` or ``-3``."""

    __slots__ = ("elements",)

    def __init__(self, values: Iterable):
        elems = tuple(sorted({Fraction(v) for v in values}))
        if not elems:
            raise ValueError("RationalSet needs at least one element")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def from_text(cls, text: str) -> "RationalSet":
        return cls(Fraction(tok) for tok in text.split(","))

    @property
    def k(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalSet) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __setattr__(self, name, value):
        raise AttributeError("RationalSet is immutable")

    def __repr__(self) -> str:
        return f"RationalSet({[str(e) for e in self.elements]!r})"


def binomial(n: int, r: int) -> int:
    """C(n, r) with the convention that it is 0 whenever n < r (or n < 0).

    r must be nonnegative.
    """
    if r < 0:
        raise ValueError("binomial: r must be nonnegative")
    if n < 0 or n < r:
        return 0
    return math.comb(n, r)


def composition_count(t: int, k: int) -> int:
    """Number of k-vectors of nonnegative integers summing to t."""
    return binomial(t + k - 1, k - 1)


def enumerate_compositions(t: int, k: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """All nonnegative integer k-vectors with coordinate sum t, ascending
    lexicographic.

    The order is part of the contract: type partitions are canonical only
    because every caller sees compositions in this exact order. Raises
    CapExceeded when the count would pass `cap` (default 10**7).
    """
    if t < 0:
        raise ValueError("composition sum must be nonnegative")
    if k < 1:
        raise ValueError("composition length must be positive")
    total = composition_count(t, k)
    limit = DEFAULT_COMPOSITION_CAP if cap is None else cap
    if total > limit:
        raise CapExceeded(f"{total} compositions exceed the cap of {limit}")

    out: list[tuple[int, ...]] = []
    vec = [0] * k

    def fill(i: int, rem: int) -> None:
        if i == k - 1:
            vec[i] = rem
            out.append(tuple(vec))
            return
        for c in range(rem + 1):
            vec[i] = c
            fill(i + 1, rem - c)

    fill(0, t)
    return out


def normalize(A: IntegerSet) -> IntegerSet:
    """Translate so min is 0 and divide by the gcd of the elements.

    Sumset sizes and type partitions are invariant under this map, so the
    result is the canonical representative of A's affine class.
    """
    if A.k < 2:
        raise ValueError("normalize requires at least two elements")
    base = A.elements[0]
    shifted = [a - base for a in A.elements]
    g = math.gcd(*shifted)
    return IntegerSet(s // g for s in shifted)
