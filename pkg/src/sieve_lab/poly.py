"""Dense univariate polynomials over the integers.

Coefficients are stored lowest degree first with trailing zeros removed, so
the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Sequence


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial quotient over Z does not exist."""


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim([int(c) for c in coeffs])

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> IntPoly:
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @classmethod
    def from_terms(cls, terms: dict[int, int] | Iterable[tuple[int, int]]) -> IntPoly:
        items = terms.items() if isinstance(terms, dict) else terms
        items = list(items)
        if not items:
            return cls()
        out = [0] * (max(e for e, _ in items) + 1)
        for e, c in items:
            out[e] += c
        return cls(out)

    # -- accessors -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs in ascending order."""
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other) -> IntPoly:
        other = _coerce(other)
        return IntPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> IntPoly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative power")
        result = IntPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple[IntPoly, IntPoly]:
        return divmod_poly(self, _coerce(other))

    def __floordiv__(self, other) -> IntPoly:
        return exact_div(self, _coerce(other))

    # -- substitutions ---------------------------------------------------

    def dilate(self, d: int) -> IntPoly:
        """Substitute x -> x**d."""
        if d < 1:
            raise ValueError("dilation factor must be positive")
        if not self.coeffs:
            return self
        out = [0] * (d * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[i * d] = c
        return IntPoly(out)

    def shift(self, s: int) -> IntPoly:
        """Multiply by x**s (s >= 0)."""
        if s < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return IntPoly([0] * s + list(self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as IntPoly")


ZERO = IntPoly()
ONE = IntPoly.constant(1)
X = IntPoly.monomial(1)


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def pow(p: IntPoly, e: int) -> IntPoly:  # noqa: A001 - mirrors the ring API
    return p ** e


def divmod_poly(p: IntPoly, q: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division from the top coefficient.

    Every quotient coefficient must be an integer; this holds whenever the
    leading coefficient of ``q`` is a unit, which covers every divisor used
    here. Otherwise NonExactDivision is raised.
    """
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dq = q.degree
    lead = q.coeffs[-1]
    if len(rem) <= dq:
        return ZERO, p
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if not c:
            continue
        k, r = divmod(c, lead)
        if r:
            raise NonExactDivision(f"non-integer quotient coefficient {c}/{lead}")
        quot[i - dq] = k
        for j, b in enumerate(q.coeffs):
            rem[i - dq + j] -= k * b
    return IntPoly(quot), IntPoly(rem)


def exact_div(p: IntPoly, q: IntPoly) -> IntPoly:
    """Return r with q*r == p, or raise NonExactDivision."""
    quot, rem = divmod_poly(p, q)
    if not rem.is_zero():
        raise NonExactDivision(f"{q} does not divide {p}")
    return quot


def format_poly(p: IntPoly, var: str = "t", style: str = "text") -> str:
    """Render with ascending powers and explicit signs."""
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.terms():
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            if style == "latex":
                power = var if e == 1 else f"{var}^{{{e}}}"
            else:
                power = var if e == 1 else f"{var}^{e}"
            body = power if a == 1 else (f"{a}{power}" if style == "latex" else f"{a}*{power}")
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
