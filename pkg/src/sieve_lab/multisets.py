"""Multisets with bounded multiplicity, the rotation actions, and CSP checks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator

from .cyclotomic import as_integer, reduce
from .poly import IntPoly
from .qanalogs import divisors, effective_bound, qbnomial


@dataclass(frozen=True)
class BoundedVector:
    """Multiplicity vector (x_1, ..., x_n) with every entry below ``bound``."""

    entries: tuple[int, ...]
    bound: int | float

    def __post_init__(self):
        if any(x < 0 or x >= self.bound for x in self.entries):
            raise ValueError(f"entries {self.entries} not in [0, {self.bound})")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int:
        return sum(self.entries)


def _compositions(n: int, k: int, b: int) -> Iterator[tuple[int, ...]]:
    # lexicographic order on (x_1, ..., x_n)
    if n == 0:
        if k == 0:
            yield ()
        return
    lo = max(0, k - (b - 1) * (n - 1))
    for x in range(lo, min(b - 1, k) + 1):
        for rest in _compositions(n - 1, k - x, b):
            yield (x,) + rest


def enumerate_vectors(n: int, k: int, b) -> Iterator[BoundedVector]:
    """All elements of X_b^n[k] in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0:
        return
    bb = effective_bound(b, k)
    for entries in _compositions(n, k, bb):
        yield BoundedVector(entries, b)


def stat(x: BoundedVector | tuple[int, ...]) -> int:
    """x_2 + 2 x_3 + ... + (n-1) x_n."""
    entries = x.entries if isinstance(x, BoundedVector) else x
    return sum(i * v for i, v in enumerate(entries))


def gf_from_enumeration(n: int, k: int, b) -> IntPoly:
    """Generating polynomial of ``stat`` over X_b^n[k]."""
    counts: dict[int, int] = {}
    for x in enumerate_vectors(n, k, b):
        s = stat(x)
        counts[s] = counts.get(s, 0) + 1
    return IntPoly.from_terms(counts)


def rho(x: BoundedVector) -> BoundedVector:
    """Cycle all coordinates: (x_1, ..., x_n) -> (x_2, ..., x_n, x_1)."""
    e = x.entries
    return BoundedVector(e[1:] + e[:1], x.bound)


def tau(x: BoundedVector) -> BoundedVector:
    """Cycle the first n-1 coordinates and keep x_n."""
    e = x.entries
    if len(e) <= 2:
        return x
    return BoundedVector(e[1:-1] + e[:1] + e[-1:], x.bound)


class Action(str, Enum):
    RHO = "rho"
    TAU = "tau"

    def apply(self, x: BoundedVector, power: int = 1) -> BoundedVector:
        order = self.order(x.n)
        power %= order
        # a power of a cyclic shift is a single shift by `power` positions
        e = x.entries
        if self is Action.RHO:
            return BoundedVector(e[power:] + e[:power], x.bound)
        head = e[:-1]
        return BoundedVector(head[power:] + head[:power] + e[-1:], x.bound)

    def order(self, n: int) -> int:
        return max(1, n if self is Action.RHO else n - 1)


def fixed_count(n: int, k: int, b, action: Action | str, power: int) -> int:
    """Number of x in X_b^n[k] fixed by action**power, by filtering the enumeration."""
    return _fixed_count(n, k, effective_bound(b, k), Action(action), power)


@lru_cache(maxsize=None)
def _fixed_count(n: int, k: int, b: int, action: Action, power: int) -> int:
    # works on raw tuples; the rotation is applied by slicing
    m = n if action is Action.RHO else n - 1
    if m <= 1:
        return sum(1 for _ in _compositions(n, k, b))
    s = power % m
    return sum(1 for x in _compositions(n, k, b) if x[s:m] + x[:s] == x[:m])


class CellStatus(str, Enum):
    VERIFIED = "VERIFIED"
    EXPECTED_DIVERGENCE = "EXPECTED-DIVERGENCE"
    FAILURE = "FAILURE"


@dataclass(frozen=True)
class CSPCell:
    n: int
    b: int
    d: int
    k: int
    action: Action
    specialization: int | None
    fixed: int
    status: CellStatus

    @property
    def gcd(self) -> int:
        return math.gcd(self.b, self.d)


@dataclass(frozen=True)
class CSPReport:
    n: int
    b: int
    cells: tuple[CSPCell, ...]

    @property
    def failures(self) -> list[CSPCell]:
        return [c for c in self.cells if c.status is CellStatus.FAILURE]

    @property
    def ok(self) -> bool:
        return not self.failures

    def cell(self, action: Action | str, d: int, k: int) -> CSPCell:
        action = Action(action)
        for c in self.cells:
            if c.action is action and c.d == d and c.k == k:
                return c
        raise KeyError((action, d, k))


@lru_cache(maxsize=None)
def csp_report(n: int, b: int) -> CSPReport:
    """Compare root-of-unity evaluations with fixed-point counts for every cell.

    Cells with gcd(b, d) != 1 are recorded but never asserted.
    """
    if n < 1 or b < 2:
        raise ValueError("need n >= 1 and b >= 2")
    cells = []
    plans = [(Action.RHO, n)]
    if n >= 2:
        plans.append((Action.TAU, n - 1))
    for action, order in plans:
        for d in divisors(order):
            for k in range((b - 1) * n + 1):
                spec = as_integer(reduce(qbnomial(n, k, b), d))
                fixed = fixed_count(n, k, b, action, order // d)
                if math.gcd(b, d) != 1:
                    status = CellStatus.EXPECTED_DIVERGENCE
                elif spec == fixed:
                    status = CellStatus.VERIFIED
                else:
                    status = CellStatus.FAILURE
                cells.append(CSPCell(n, b, d, k, action, spec, fixed, status))
    return CSPReport(n, b, tuple(cells))
