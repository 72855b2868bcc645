"""Two-coin Frobenius problem: denumerants, Sylvester sets and the double abacus.

Labels on the integer lattice are lambda(x, y) = x*d + y*b. The fundamental
row abacus R is rows y = 0..d-1 restricted to nonnegative labels; it carries
every natural number exactly once, and block B_k of R is the column strip
(k-1)*b <= x < k*b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .poly import ONE, IntPoly, exact_div
from .qanalogs import q_integer, q_integer_at


class NotCoprime(ValueError):
    """The coin values share a common factor."""


def _require_coprime(b: int, d: int) -> None:
    if b < 1 or d < 1:
        raise ValueError("coin values must be positive")
    if math.gcd(b, d) != 1:
        raise NotCoprime(f"gcd({b}, {d}) = {math.gcd(b, d)}")


def _require_nontrivial(b: int, d: int) -> None:
    _require_coprime(b, d)
    if b < 2 or d < 2:
        raise ValueError("rectangle and multisection formulas need b, d >= 2")


@dataclass(frozen=True)
class CoinPair:
    b: int
    d: int

    def __post_init__(self):
        _require_coprime(self.b, self.d)


@dataclass(frozen=True)
class AbacusPoint:
    x: int
    y: int
    b: int
    d: int

    @property
    def label(self) -> int:
        return self.x * self.d + self.y * self.b

    def in_abacus(self) -> bool:
        return self.label >= 0

    def in_row_abacus(self) -> bool:
        return 0 <= self.y < self.d and self.label >= 0

    @property
    def block(self) -> int:
        return self.x // self.b + 1


@dataclass(frozen=True)
class CongruenceData:
    delta: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]


def denumerant(b: int, d: int, n: int) -> int:
    """Number of (k, l) in N^2 with k*b + l*d = n, by direct enumeration."""
    if n < 0:
        return 0
    return sum(1 for k in range(n // b + 1) if (n - k * b) % d == 0)


@lru_cache(maxsize=None)
def sylvester_set(b: int, d: int) -> tuple[int, ...]:
    """Sorted positive integers that are not representable by coins b and d."""
    _require_coprime(b, d)
    # everything >= b*d is representable
    return tuple(n for n in range(1, b * d) if denumerant(b, d, n) == 0)


def sylvester_poly(b: int, d: int) -> IntPoly:
    return IntPoly.from_terms({s: 1 for s in sylvester_set(b, d)})


def sylvester_identity(b: int, d: int) -> IntPoly:
    """[b]_{t^d} / [b]_t, written as 1 + (t - 1) S_{b,d}(t)."""
    return ONE + (IntPoly([-1, 1]) * sylvester_poly(b, d))


def sylvester_quotient(b: int, d: int) -> IntPoly:
    """[b]_{t^d} / [b]_t by exact polynomial division."""
    _require_coprime(b, d)
    return exact_div(q_integer_at(b, d), q_integer(b))


def locate(b: int, d: int, n: int) -> AbacusPoint:
    """The unique point of the fundamental row abacus with label n."""
    _require_coprime(b, d)
    if n < 0:
        raise ValueError("labels in the row abacus are nonnegative")
    y = (n * pow(b, -1, d)) % d if d > 1 else 0
    x, r = divmod(n - y * b, d)
    assert r == 0
    return AbacusPoint(x, y, b, d)


def block_index(b: int, d: int, n: int) -> int:
    """Index k of the block B_k of R that contains label n."""
    return locate(b, d, n).block


@lru_cache(maxsize=None)
def congruence_data(b: int, d: int) -> CongruenceData:
    _require_coprime(b, d)
    delta = [0] * d
    for j in range(d):
        delta[(j * b) % d] = j
    beta = [0] * b
    for j in range(b):
        beta[(j * d) % b] = j
    gamma = tuple((delta[r] * b - r) // d for r in range(d))
    return CongruenceData(tuple(delta), tuple(beta), gamma)


def rectangle_decomposition(b: int, d: int) -> tuple[IntPoly, IntPoly]:
    """(positive, negative) with [b]_{t^d}/[b]_t = positive - negative."""
    _require_nontrivial(b, d)
    cd = congruence_data(b, d)
    b1, d1 = cd.beta[1], cd.delta[1]
    pos = q_integer_at(b1, d) * q_integer_at(d1, b)
    neg = (q_integer_at(b - b1, d) * q_integer_at(d - d1, b)).shift(1)
    return pos, neg


def rectangle_labels(b: int, d: int) -> tuple[list[int], list[int]]:
    """Labels of the two lattice rectangles X_0 (corner label 0) and X_1 (corner label 1).

    Listed row by row from the bottom, left to right.
    """
    _require_nontrivial(b, d)
    cd = congruence_data(b, d)
    b1, d1 = cd.beta[1], cd.delta[1]
    x0 = [AbacusPoint(x, y, b, d).label for y in range(d1) for x in range(b1)]
    x1 = [
        AbacusPoint(x, y, b, d).label
        for y in range(d1, d)
        for x in range(-b + b1, 0)
    ]
    return x0, x1


def multisection_f(b: int, d: int, r: int) -> IntPoly:
    """f_r with [b]_{t^d}/[b]_t = sum_r t^r f_r(t^d)."""
    _require_nontrivial(b, d)
    if not 0 <= r < d:
        raise ValueError("residue out of range")
    cd = congruence_data(b, d)
    b1, d1 = cd.beta[1], cd.delta[1]
    if cd.delta[r] < d1:
        return q_integer(b1).shift(cd.gamma[r])
    return -q_integer(b - b1).shift(cd.gamma[r] - b + b1)


def sign(b: int, d: int, r: int) -> int:
    """+1 if delta_r < delta_1 else -1."""
    cd = congruence_data(b, d)
    return 1 if cd.delta[r % d] < cd.delta[1 % d] else -1


def corollary_g(b: int, d: int, n: int, r: int) -> tuple[IntPoly, int]:
    """(g_r, epsilon_r) with t^r g_r(t^d) the r-th d-multisection of the twisted gf."""
    _require_nontrivial(b, d)
    if (n + 1) % d:
        raise ValueError(f"d={d} must divide n+1={n + 1}")
    m = (n + 1) // d
    return multisection_f(b, d, r) * q_integer(b) ** (m - 1), sign(b, d, r)


def is_unimodal(coeffs) -> bool:
    """Weakly increasing then weakly decreasing."""
    coeffs = list(coeffs)
    i = 0
    while i + 1 < len(coeffs) and coeffs[i] <= coeffs[i + 1]:
        i += 1
    while i + 1 < len(coeffs) and coeffs[i] >= coeffs[i + 1]:
        i += 1
    return i + 1 >= len(coeffs)


def render_abacus(b: int, d: int, x_range: range, y_range: range) -> str:
    """ASCII picture of labels.

    Row-abacus points are bracketed, points off the abacus (negative label)
    show as '.', and '|' marks the left edge of each block column.
    """
    _require_coprime(b, d)
    width = max(
        len(str(AbacusPoint(x, y, b, d).label)) for x in x_range for y in y_range
    ) + 2
    lines = []
    for y in reversed(y_range):
        cells = []
        for x in x_range:
            p = AbacusPoint(x, y, b, d)
            if not p.in_abacus():
                text = "."
            elif p.in_row_abacus():
                text = f"[{p.label}]"
            else:
                text = str(p.label)
            edge = "|" if x % b == 0 else " "
            cells.append(edge + text.rjust(width))
        lines.append(f"{y:>4} " + "".join(cells))
    axis = "".join(" " + str(x).rjust(width) for x in x_range)
    lines.append("     " + axis)
    return "\n".join(lines)
