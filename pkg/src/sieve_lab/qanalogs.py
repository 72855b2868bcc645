"""q-integers, Gaussian binomials, bounded binomials and cyclotomic polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .poly import ONE, ZERO, IntPoly, exact_div

# Sentinel for b = infinity (unbounded multiplicities).
UNBOUNDED = math.inf


def effective_bound(b, k: int):
    """Replace the unbounded sentinel by k+1, which gives the same sets."""
    if b == UNBOUNDED:
        return k + 1
    if b < 1:
        raise ValueError(f"bound must be positive, got {b}")
    return int(b)


def as_integer_arg(x) -> int | None:
    """Integer value of ``x`` or None if it is a non-integral rational."""
    if isinstance(x, bool):
        raise TypeError("bool is not an integer argument")
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        f = Fraction(x)
        return f.numerator if f.denominator == 1 else None
    raise TypeError(f"expected an integer or rational, got {type(x).__name__}")


@lru_cache(maxsize=None)
def q_integer(n: int) -> IntPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return IntPoly([1] * n)


def q_integer_at(n: int, d: int) -> IntPoly:
    """[n]_{q^d}."""
    return q_integer(n).dilate(d)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> IntPoly:
    out = ONE
    for i in range(1, n + 1):
        out = out * q_integer(i)
    return out


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> IntPoly:
    """The q-binomial coefficient; zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    out = ONE
    # each partial product is itself a Gaussian binomial, so every division is exact
    for i in range(1, k + 1):
        out = exact_div(out * q_integer(n - k + i), q_integer(i))
    return out


@lru_cache(maxsize=None)
def _bnomial_row(n: int, b: int) -> tuple[int, ...]:
    return (q_integer(b) ** n).coeffs


def bnomial(n, k, b) -> int:
    """Coefficient of t^k in (1 + t + ... + t^(b-1))^n.

    Rational ``n`` or ``k`` that are not integers give 0.
    """
    n, k = as_integer_arg(n), as_integer_arg(k)
    if n is None or k is None or n < 0 or k < 0:
        return 0
    b = effective_bound(b, k)
    row = _bnomial_row(n, b)
    return row[k] if k < len(row) else 0


@dataclass(frozen=True)
class BivariateGF:
    """Polynomial in t whose coefficients are polynomials in q."""

    layers: tuple[IntPoly, ...]

    def __getitem__(self, k: int) -> IntPoly:
        if 0 <= k < len(self.layers):
            return self.layers[k]
        return ZERO

    def __len__(self) -> int:
        return len(self.layers)

    def at_q(self, q: int) -> IntPoly:
        """Specialize q to an integer, leaving a polynomial in t."""
        return IntPoly(layer(q) for layer in self.layers)


@lru_cache(maxsize=None)
def qbnomial_gf(n: int, b: int) -> BivariateGF:
    """prod_{i=0}^{n-1} [b]_{q^i t}; layer k is the q-analogue of bnomial(n, k, b)."""
    if b == UNBOUNDED:
        raise ValueError("the full generating function needs a finite bound")
    if n < 0 or b < 1:
        raise ValueError("need n >= 0 and b >= 1")
    layers = [ONE]
    for i in range(n):
        out = [ZERO] * (len(layers) + b - 1)
        for k, layer in enumerate(layers):
            for j in range(b):
                out[k + j] = out[k + j] + layer.shift(i * j)
        layers = out
    return BivariateGF(tuple(layers))


def qbnomial(n, k, b) -> IntPoly:
    """Single layer of :func:`qbnomial_gf`; b may be UNBOUNDED."""
    n, k = as_integer_arg(n), as_integer_arg(k)
    if n is None or k is None or n < 0 or k < 0:
        return ZERO
    return qbnomial_gf(n, effective_bound(b, k))[k]


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("divisors of a positive integer only")
    small = [i for i in range(1, math.isqrt(n) + 1) if n % i == 0]
    return sorted(set(small + [n // i for i in small]))


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """Phi_d(q), by dividing q^d - 1 by Phi_e for the proper divisors e of d."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    out = IntPoly.monomial(d) - 1
    for e in divisors(d)[:-1]:
        out = exact_div(out, cyclotomic(e))
    return out


def multisect(p: IntPoly, d: int, r: int) -> IntPoly:
    """f with f(t^d) * t^r equal to the terms of p with exponent = r mod d."""
    if d < 1 or not 0 <= r < d:
        raise ValueError("need d >= 1 and 0 <= r < d")
    return IntPoly(p.coeffs[r::d])
