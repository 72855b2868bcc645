"""Integer partitions and their statistics."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Being a tuple, partitions hash, compare lexicographically and work as
    dictionary keys directly. Lexicographic order refines dominance order.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts if p)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> Partition:
        """Sorted nonzero entries of an exponent vector."""
        return cls(sorted((e for e in exps if e), reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for p in self if p >= i) for i in range(1, self[0] + 1))

    def z(self) -> int:
        """prod_i i^(m_i) * m_i!  (order of the centralizer of a permutation of this cycle type)."""
        return prod(i**m * factorial(m) for i, m in self.multiplicities().items())

    def count_divisible(self, b: int) -> int:
        """Number of parts divisible by b."""
        return sum(1 for p in self if p % b == 0)

    def dominates(self, other: Partition) -> bool:
        if self.weight != other.weight:
            return False
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return True

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def partitions(k: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """Partitions of k in decreasing lexicographic order."""
    for p in _partitions(k, k if max_part is None else max_part, k if max_length is None else max_length):
        yield Partition(p)


@lru_cache(maxsize=None)
def _partitions(k: int, max_part: int, max_length: int) -> tuple[tuple[int, ...], ...]:
    if k == 0:
        return ((),)
    if max_length == 0 or max_part == 0:
        return ()
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in _partitions(k - first, first, max_length - 1):
            out.append((first,) + rest)
    return tuple(out)


def rearrangements(parts: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset given as a tuple."""
    counts = sorted(Counter(parts).items())
    n = len(parts)

    def rec(prefix: list[int]):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for i, (v, c) in enumerate(counts):
            if c:
                counts[i] = (v, c - 1)
                prefix.append(v)
                yield from rec(prefix)
                prefix.pop()
                counts[i] = (v, c)

    yield from rec([])
