"""Symmetric polynomials in n variables, stored in the monomial basis.

A SymPoly maps partitions (length <= n, the empty partition being the
constant term) to integer coefficients of m_lambda.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping

from .cyclotomic import CycElem, as_integer, reduce
from .poly import IntPoly
from .qanalogs import UNBOUNDED, as_integer_arg
from .partitions import Partition, partitions, rearrangements


class VariableCountMismatch(ValueError):
    pass


class NonSymmetric(ValueError):
    pass


class NonIntegerResult(ArithmeticError):
    pass


class NonIntegerCoefficient(ArithmeticError):
    pass


class SymPoly:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Iterable[int], int] | None = None):
        if n < 0:
            raise ValueError("number of variables must be nonnegative")
        self.n = n
        clean: dict[Partition, int] = {}
        for lam, c in (terms or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if len(lam) > n:
                raise ValueError(f"{lam} has more than {n} parts")
            if c:
                clean[lam] = clean.get(lam, 0) + c
                if not clean[lam]:
                    del clean[lam]
        self.terms = clean

    @classmethod
    def from_monomials(cls, n: int, poly: Mapping[tuple[int, ...], int]) -> SymPoly:
        """Build from an exponent-vector -> coefficient map, checking symmetry."""
        terms: dict[Partition, int] = {}
        for exps, c in poly.items():
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not have length {n}")
            if not c:
                continue
            lam = Partition.from_exponents(exps)
            if lam in terms and terms[lam] != c:
                raise NonSymmetric(f"coefficients of m_{list(lam)} disagree")
            terms[lam] = c
        out = cls(n, terms)
        for exps, c in out.monomials():
            if poly.get(exps, 0) != c:
                raise NonSymmetric(f"missing monomial {exps}")
        return out

    @classmethod
    def constant(cls, n: int, c: int) -> SymPoly:
        return cls(n, {Partition(): c})

    # -- inspection ------------------------------------------------------

    def coefficient(self, lam: Iterable[int]) -> int:
        return self.terms.get(Partition(lam), 0)

    def monomial_coefficient(self, exps: Iterable[int]) -> int:
        return self.terms.get(Partition.from_exponents(exps), 0)

    def monomials(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Expand into (exponent vector, coefficient) pairs."""
        for lam, c in self.terms.items():
            for alpha in rearrangements(lam.padded(self.n)):
                yield alpha, c

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {lam.weight for lam in self.terms}

    def homogeneous_component(self, k: int) -> SymPoly:
        return SymPoly(self.n, {lam: c for lam, c in self.terms.items() if lam.weight == k})

    def by_degree(self) -> dict[int, dict[Partition, int]]:
        out: dict[int, dict[Partition, int]] = defaultdict(dict)
        for lam, c in self.terms.items():
            out[lam.weight][lam] = c
        return dict(out)

    def scale_parts(self, b: int) -> SymPoly:
        """Substitute z_i -> z_i^b."""
        return SymPoly(self.n, {Partition(b * p for p in lam): c for lam, c in self.terms.items()})

    # -- arithmetic ------------------------------------------------------

    def _same_ring(self, other) -> SymPoly:
        if isinstance(other, int):
            return SymPoly.constant(self.n, other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        if other.n != self.n:
            raise VariableCountMismatch(f"{self.n} vs {other.n} variables")
        return other

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SymPoly.constant(self.n, other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other) -> SymPoly:
        other = self._same_ring(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> SymPoly:
        return SymPoly(self.n, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other) -> SymPoly:
        other = self._same_ring(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other) -> SymPoly:
        if isinstance(other, int):
            return SymPoly(self.n, {lam: other * c for lam, c in self.terms.items()})
        other = self._same_ring(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> SymPoly:
        out = SymPoly.constant(self.n, 1)
        for _ in range(e):
            out = out * self
        return out

    def specialize(self, exponents: Iterable[int], d: int) -> CycElem:
        return specialize(self, exponents, d)

    def __repr__(self) -> str:
        body = ", ".join(f"{list(lam)}: {c}" for lam, c in sorted(self.terms.items(), reverse=True))
        return f"SymPoly(n={self.n}, {{{body}}})"


@lru_cache(maxsize=None)
def _splits(nu: tuple[int, ...], total: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """All (beta, nu - beta) with 0 <= beta <= nu componentwise and |beta| = total,
    each side reported as a sorted partition."""
    out = []

    def rec(i: int, left: int, acc: list[int]):
        if i == len(nu):
            if left == 0:
                rest = [a - b for a, b in zip(nu, acc)]
                out.append((Partition.from_exponents(acc), Partition.from_exponents(rest)))
            return
        remaining_cap = sum(nu[i:])
        if left > remaining_cap:
            return
        for v in range(min(nu[i], left) + 1):
            acc.append(v)
            rec(i + 1, left - v, acc)
            acc.pop()

    rec(0, total, [])
    return tuple(out)


def mul(f: SymPoly, g: SymPoly) -> SymPoly:
    """Product in the monomial basis.

    The coefficient of m_nu in f*g is the coefficient of z^nu, i.e. the sum over
    exponent vectors beta <= nu of g[beta] * f[nu - beta].
    """
    if f.n != g.n:
        raise VariableCountMismatch(f"{f.n} vs {g.n} variables")
    n = f.n
    out: dict[Partition, int] = defaultdict(int)
    fd, gd = f.by_degree(), g.by_degree()
    for df, F in fd.items():
        for dg, G in gd.items():
            for nu in partitions(df + dg, max_length=n):
                s = 0
                for beta, rest in _splits(tuple(nu), dg):
                    gb = G.get(beta)
                    if gb:
                        fr = F.get(rest)
                        if fr:
                            s += gb * fr
                if s:
                    out[nu] += s
    return SymPoly(n, out)


# -- the classical bases ---------------------------------------------------


def m_basis(lam: Iterable[int], n: int) -> SymPoly:
    lam = Partition(lam)
    if len(lam) > n:
        return SymPoly(n)
    return SymPoly(n, {lam: 1})


@lru_cache(maxsize=None)
def e_k(k: int, n: int) -> SymPoly:
    if k < 0 or k > n:
        return SymPoly(n)
    return SymPoly(n, {Partition([1] * k): 1})


@lru_cache(maxsize=None)
def h_k(k: int, n: int) -> SymPoly:
    if k < 0:
        return SymPoly(n)
    return SymPoly(n, {lam: 1 for lam in partitions(k, max_length=n)})


@lru_cache(maxsize=None)
def p_k(k: int, n: int) -> SymPoly:
    if k < 0:
        return SymPoly(n)
    if k == 0:
        return SymPoly.constant(n, 1)
    return m_basis((k,), n)


def _product_basis(single, lam: Iterable[int], n: int) -> SymPoly:
    out = SymPoly.constant(n, 1)
    for part in Partition(lam):
        out = out * single(part, n)
    return out


@lru_cache(maxsize=None)
def e_partition(lam: Partition, n: int) -> SymPoly:
    return _product_basis(e_k, lam, n)


@lru_cache(maxsize=None)
def h_partition(lam: Partition, n: int) -> SymPoly:
    return _product_basis(h_k, lam, n)


@lru_cache(maxsize=None)
def p_partition(lam: Partition, n: int) -> SymPoly:
    return _product_basis(p_k, lam, n)


@lru_cache(maxsize=None)
def h_k_b(k: int, b, n: int) -> SymPoly:
    """b-bounded complete symmetric polynomial, from h^(b)(t) = E(-t^b; z^b) H(t; z)."""
    if b == UNBOUNDED:
        return h_k(k, n)
    if b < 2:
        raise ValueError("bound must be at least 2")
    out = SymPoly(n)
    for ell in range(k // b + 1):
        term = e_k(ell, n).scale_parts(b) * h_k(k - b * ell, n)
        out = out + term if ell % 2 == 0 else out - term
    return out


def h_k_b_direct(k: int, b, n: int) -> SymPoly:
    """Sum of m_lambda over partitions of k with parts below b."""
    max_part = k if b == UNBOUNDED else min(k, int(b) - 1)
    return SymPoly(n, {lam: 1 for lam in partitions(k, max_part=max_part, max_length=n)})


# -- Schur polynomials -----------------------------------------------------


def _determinant(entry, m: int, n: int) -> SymPoly:
    """Laplace expansion along rows with memoized minors."""

    @lru_cache(maxsize=None)
    def minor(cols: tuple[int, ...]) -> SymPoly:
        i = m - len(cols)
        if not cols:
            return SymPoly.constant(n, 1)
        out = SymPoly(n)
        for pos, j in enumerate(cols):
            a = entry(i, j)
            if a.is_zero():
                continue
            term = a * minor(cols[:pos] + cols[pos + 1:])
            out = out + term if pos % 2 == 0 else out - term
        return out

    return minor(tuple(range(m)))


@lru_cache(maxsize=None)
def schur(lam: Partition, n: int) -> SymPoly:
    """Schur polynomial by the Jacobi-Trudi determinant (h form or e form, whichever is smaller)."""
    lam = Partition(lam)
    if len(lam) > n:
        return SymPoly(n)
    if not lam:
        return SymPoly.constant(n, 1)
    conj = lam.conjugate()
    if len(lam) <= len(conj):
        rows, single = lam, h_k
    else:
        rows, single = conj, e_k
    m = len(rows)
    return _determinant(lambda i, j: single(rows[i] - i + j, n), m, n)


def to_schur(f: SymPoly) -> dict[Partition, int]:
    """Coefficients c_lambda with f = sum c_lambda s_lambda.

    Peels off the lexicographically largest monomial term; s_lambda is m_lambda
    plus terms lower in dominance, which are lexicographically smaller.
    """
    out: dict[Partition, int] = {}
    rest = dict(f.terms)
    while rest:
        lam = max(rest)
        c = rest[lam]
        s = schur(lam, f.n)
        if s.coefficient(lam) != 1 or any(mu > lam for mu in s.terms):
            raise NonSymmetric(f"elimination stalled at {lam}")
        out[lam] = c
        for mu, a in s.terms.items():
            v = rest.get(mu, 0) - c * a
            if v:
                rest[mu] = v
            else:
                rest.pop(mu, None)
    return out


def from_schur(coeffs: Mapping[Iterable[int], int], n: int) -> SymPoly:
    out = SymPoly(n)
    for lam, c in coeffs.items():
        out = out + c * schur(Partition(lam), n)
    return out


def petrie_coefficients(k: int, b, n: int) -> dict[Partition, int]:
    """Schur coefficients of h_k^(b); needs n >= k so that no s_lambda vanishes."""
    if n < k:
        raise ValueError(f"need at least k={k} variables, got {n}")
    return to_schur(h_k_b(k, b, n))


# -- specialization at roots of unity --------------------------------------


@lru_cache(maxsize=None)
def monomial_residues(lam: Partition, exponents: tuple[int, ...], d: int) -> tuple[int, ...]:
    """m_lambda(w^a_1, ..., w^a_n) as counts of each power w^0..w^(d-1)."""
    n = len(exponents)
    out = [0] * d
    if len(lam) > n:
        return tuple(out)
    counts = lam.multiplicities()
    values = sorted(counts)
    start = tuple(counts[v] for v in values)
    exps = tuple(a % d for a in exponents)

    @lru_cache(maxsize=None)
    def rec(i: int, left: tuple[int, ...]) -> tuple[int, ...]:
        if i == n:
            return (1,) + (0,) * (d - 1)
        acc = [0] * d
        if n - i > sum(left):
            for r, c in enumerate(rec(i + 1, left)):
                acc[r] += c
        for j, c in enumerate(left):
            if c:
                shift = values[j] * exps[i] % d
                sub = rec(i + 1, left[:j] + (c - 1,) + left[j + 1:])
                for r, v in enumerate(sub):
                    if v:
                        acc[(r + shift) % d] += v
        return tuple(acc)

    return rec(0, start)


def specialize(f: SymPoly, exponents: Iterable[int], d: int) -> CycElem:
    """f(w^a_1, ..., w^a_n) for a primitive d-th root of unity w."""
    exponents = tuple(exponents)
    if len(exponents) != f.n:
        raise VariableCountMismatch(f"{len(exponents)} exponents for {f.n} variables")
    total = [0] * d
    for lam, c in f.terms.items():
        for r, v in enumerate(monomial_residues(lam, exponents, d)):
            total[r] += c * v
    return reduce(IntPoly(total), d)


def specialize_int(f: SymPoly, exponents: Iterable[int], d: int) -> int:
    value = as_integer(specialize(f, exponents, d))
    if value is None:
        raise NonIntegerCoefficient(f"specialization of {f} at conductor {d} is not rational")
    return value


def principal_exponents(n: int, case: str) -> tuple[int, ...]:
    """(0, ..., n-1) for cases a and b, (1, ..., n) for case c."""
    return tuple(range(1, n + 1)) if case == "c" else tuple(range(n))


# -- power sum expansions --------------------------------------------------


def _bounded_sign(lam: Partition, b) -> int:
    """(1-b)^l_b(lambda); 1 when b is unbounded."""
    if b == UNBOUNDED:
        return 1
    return (1 - b) ** lam.count_divisible(b)


def power_sum_expansion(k: int, b, n: int) -> SymPoly:
    """k! * sum_{|lambda|=k} z_lambda^-1 (1-b)^l_b(lambda) p_lambda (denominators cleared)."""
    out = SymPoly(n)
    fk = factorial(k)
    for lam in partitions(k):
        out = out + fk // lam.z() * _bounded_sign(lam, b) * p_partition(lam, n)
    return out


def power_expansion_check(k: int, b, n: int) -> bool:
    return power_sum_expansion(k, b, n) == factorial(k) * h_k_b(k, b, n)


def _cleared_sum(k: int, weight) -> int:
    fk = factorial(k)
    total = sum(fk // lam.z() * weight(lam) for lam in partitions(k))
    q, r = divmod(total, fk)
    if r:
        raise NonIntegerResult(f"partition sum {total}/{fk} is not an integer")
    return q


def bnomial_partition_sum(n: int, k: int, b) -> int:
    """sum_{|lambda|=k} z_lambda^-1 (1-b)^l_b(lambda) n^l(lambda)."""

    return _cleared_sum(k, lambda lam: _bounded_sign(lam, b) * n ** len(lam))


def _check_case(n: int, d: int, case: str) -> None:
    m = n + {"a": 0, "b": -1, "c": 1}[case]
    if m < 0 or m % d:
        raise ValueError(f"case {case} needs d={d} to divide {m}")


def lemma_pow(lam: Iterable[int], n: int, d: int, case: str) -> int:
    """Closed form for p_lambda at the principal root-of-unity point of each case."""
    lam = Partition(lam)
    _check_case(n, d, case)
    ld = lam.count_divisible(d)
    if case == "a":
        return n ** len(lam) if ld == len(lam) else 0
    if case == "b":
        return n**ld
    return n**ld * (-1) ** (len(lam) - ld)


def corollary_hbpow(n: int, k: int, b: int, d: int, case: str) -> int:
    """Root-of-unity value of <n,k>^(b) (twisted by w^k in case c) as a partition sum."""
    _check_case(n, d, case)
    return _cleared_sum(k, lambda lam: _bounded_sign(lam, b) * lemma_pow(lam, n, d, case))


def corollary_hbpow_reduced(n: int, k: int, b: int, d: int) -> int:
    """Case d | n written over partitions of k/d with n/d in place of n."""
    _check_case(n, d, "a")
    kd = as_integer_arg(Fraction(k, d))
    if kd is None:
        return 0
    return bnomial_partition_sum(n // d, kd, b)


# -- dual Cauchy expansions ------------------------------------------------


def _root_point(b: int) -> tuple[int, ...]:
    return tuple(range(1, b))


def cauchy_coefficients(k: int, b: int) -> dict[str, dict[Partition, int]]:
    """Integer values p_lambda, e_lambda, m_lambda, s_lambda' at (zeta, ..., zeta^(b-1))."""
    nb = b - 1
    pt = _root_point(b)
    out: dict[str, dict[Partition, int]] = {"p": {}, "e": {}, "m": {}, "s_conj": {}}
    for lam in partitions(k):
        out["p"][lam] = specialize_int(p_partition(lam, nb), pt, b)
        out["e"][lam] = specialize_int(e_partition(lam, nb), pt, b)
        out["m"][lam] = specialize_int(m_basis(lam, nb), pt, b)
        out["s_conj"][lam] = specialize_int(schur(lam.conjugate(), nb), pt, b)
    return out


def cauchy_expansions(k: int, b: int, n: int) -> dict[str, SymPoly]:
    """The four dual-Cauchy expressions for h_k^(b) in n variables."""
    if b < 2:
        raise ValueError("bound must be at least 2")
    co = cauchy_coefficients(k, b)
    sign = (-1) ** k
    fk = factorial(k)
    a = SymPoly(n)
    bb = SymPoly(n)
    c = SymPoly(n)
    dd = SymPoly(n)
    for lam in partitions(k):
        a = a + (-1) ** len(lam) * (fk // lam.z()) * co["p"][lam] * p_partition(lam, n)
        bb = bb + sign * co["e"][lam] * m_basis(lam, n)
        c = c + sign * co["m"][lam] * e_partition(lam, n)
        dd = dd + sign * co["s_conj"][lam] * schur(lam, n)
    for lam, v in a.terms.items():
        if v % fk:
            raise NonIntegerCoefficient(f"power-sum expansion leaves {v}/{fk} at {lam}")
    a = SymPoly(n, {lam: v // fk for lam, v in a.terms.items()})
    return {"power": a, "elementary_monomial": bb, "monomial_elementary": c, "schur": dd}
