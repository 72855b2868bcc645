"""Arithmetic in Z[w] for a primitive d-th root of unity w, as Z[q]/Phi_d(q)."""

from __future__ import annotations

from .poly import IntPoly, divmod_poly, format_poly
from .qanalogs import cyclotomic


class ConductorMismatch(ValueError):
    """Operands live in different cyclotomic rings."""


def _fold(p: IntPoly, d: int) -> list[int]:
    # q^d = 1 holds modulo Phi_d, so fold exponents first
    out = [0] * d
    for i, c in enumerate(p.coeffs):
        out[i % d] += c
    return out


class CycElem:
    __slots__ = ("d", "rep")

    def __init__(self, d: int, rep: IntPoly):
        if d < 1:
            raise ValueError("conductor must be positive")
        self.d = d
        self.rep = rep

    @classmethod
    def from_residues(cls, residues, d: int) -> CycElem:
        """Element sum_j residues[j] * w^j, for a length-d residue vector."""
        return reduce(IntPoly(residues), d)

    def _check(self, other) -> CycElem:
        if isinstance(other, int):
            return reduce(IntPoly.constant(other), self.d)
        if not isinstance(other, CycElem):
            return NotImplemented
        if other.d != self.d:
            raise ConductorMismatch(f"conductors {self.d} and {other.d} differ")
        return other

    def __add__(self, other) -> CycElem:
        other = self._check(other)
        if other is NotImplemented:
            return other
        return reduce(self.rep + other.rep, self.d)

    __radd__ = __add__

    def __neg__(self) -> CycElem:
        return CycElem(self.d, -self.rep)

    def __sub__(self, other) -> CycElem:
        other = self._check(other)
        if other is NotImplemented:
            return other
        return reduce(self.rep - other.rep, self.d)

    def __mul__(self, other) -> CycElem:
        other = self._check(other)
        if other is NotImplemented:
            return other
        return reduce(self.rep * other.rep, self.d)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CycElem:
        if e < 0:
            raise ValueError("negative powers are not supported; use root_power")
        out = reduce(IntPoly.constant(1), self.d)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.rep == IntPoly.constant(other)
        if not isinstance(other, CycElem):
            return NotImplemented
        return self.d == other.d and self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.d, self.rep))

    def as_integer(self) -> int | None:
        return as_integer(self)

    def __repr__(self) -> str:
        return f"CycElem(d={self.d}, rep={self.rep.coeffs})"

    def __str__(self) -> str:
        return format_poly(self.rep, var="w")


def reduce(p: IntPoly, d: int) -> CycElem:
    """Class of p(q) modulo Phi_d(q), i.e. p evaluated at w."""
    if d < 1:
        raise ValueError("conductor must be positive")
    folded = IntPoly(_fold(p, d))
    if folded.degree >= cyclotomic(d).degree:
        _, folded = divmod_poly(folded, cyclotomic(d))
    return CycElem(d, folded)


def as_integer(e: CycElem) -> int | None:
    """The rational integer e equals, or None when e is not in Z."""
    if e.rep.degree <= 0:
        return e.rep[0]
    return None


def root_power(d: int, k: int) -> CycElem:
    """w^k for any integer k."""
    return reduce(IntPoly.monomial(k % d), d)


def evaluate_at_root(p: IntPoly, d: int) -> int | None:
    """Shortcut: integer value of p(w), or None."""
    return as_integer(reduce(p, d))
