"""Closed-form generating functions for root-of-unity evaluations of the q-bounded binomials.

For a primitive d-th root of unity w, the three divisibility cases are

* d | n:      sum_k <n,k>_w t^k
* d | (n-1):  sum_k <n,k>_w t^k
* d | (n+1):  sum_k w^k <n,k>_w t^k   (the "twisted" values)

and each has an exact polynomial closed form for any g = gcd(b, d).
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from math import comb

from .coins import sylvester_set
from .cyclotomic import as_integer, reduce, root_power
from .poly import IntPoly, exact_div
from .qanalogs import bnomial, q_integer, qbnomial


class Case(str, Enum):
    A = "a"  # d | n
    B = "b"  # d | (n-1)
    C = "c"  # d | (n+1)

    def block_count(self, n: int, d: int) -> int:
        """(n + offset) / d, checking divisibility."""
        m = n + {"a": 0, "b": -1, "c": 1}[self.value]
        if m < 0 or m % d:
            raise ValueError(f"case {self.value} needs d={d} to divide {m}")
        return m // d


def _block_factor(d: int, b: int) -> IntPoly:
    """(1 - t^(bd/g))^g / (1 - t^d), an exact polynomial."""
    g = math.gcd(b, d)
    num = (1 - IntPoly.monomial(b * d // g)) ** g
    return exact_div(num, 1 - IntPoly.monomial(d))


def gf_case_a(n: int, d: int, b: int) -> IntPoly:
    return _block_factor(d, b) ** Case.A.block_count(n, d)


def gf_case_b(n: int, d: int, b: int) -> IntPoly:
    return q_integer(b) * _block_factor(d, b) ** Case.B.block_count(n, d)


def gf_case_c(n: int, d: int, b: int) -> IntPoly:
    return exact_div(_block_factor(d, b) ** Case.C.block_count(n, d), q_integer(b))


_GF = {Case.A: gf_case_a, Case.B: gf_case_b, Case.C: gf_case_c}


def closed_form(case: Case | str, n: int, d: int, b: int) -> IntPoly:
    return _GF[Case(case)](n, d, b)


def direct_value(case: Case | str, n: int, k: int, d: int, b: int) -> int | None:
    """Evaluate <n,k>_q^(b) at q = w (times w^k in case c) by cyclotomic reduction."""
    case = Case(case)
    e = reduce(qbnomial(n, k, b), d)
    if case is Case.C:
        e = root_power(d, k) * e
    return as_integer(e)


def admissible_cases(n: int, d: int) -> list[Case]:
    out = []
    for case in Case:
        m = n + {"a": 0, "b": -1, "c": 1}[case.value]
        if m >= 0 and m % d == 0:
            out.append(case)
    return out


def ek_root_formula(n: int, k: int, d: int) -> int:
    """e_k(w, w^2, ..., w^n) for d | (n+1).

    Equals (-1)^(k + floor(k/d)) * C((n+1)/d - 1, floor(k/d)). For odd d the
    sign reduces to (-1)^(k - d floor(k/d)); for even d an extra factor
    (-1)^floor(k/d) appears.
    """
    m = Case.C.block_count(n, d)
    if k < 0:
        return 0
    j = k // d
    return (-1) ** (k + j) * comb(m - 1, j)


def ek_root_formula_odd(n: int, k: int, d: int) -> int:
    """The sign convention (-1)^(k - d floor(k/d)); agrees with ek_root_formula only for odd d."""
    m = Case.C.block_count(n, d)
    if k < 0:
        return 0
    j = k // d
    return (-1) ** (k - d * j) * comb(m - 1, j)


def corollary_sums(n: int, d: int, b: int, case: Case | str) -> int:
    """Predicted value of the t = 1 sum of the case's generating function."""
    case = Case(case)
    m = case.block_count(n, d)
    if math.gcd(b, d) != 1:
        return 0
    return {Case.A: b**m, Case.B: b ** (m + 1), Case.C: b ** (m - 1)}[case]


def alternating_formula(n: int, k: int, b: int, d: int) -> int:
    """Twisted value w^k <n,k>_w via the Sylvester set, for d | (n+1) and gcd(b,d)=1."""
    m = Case.C.block_count(n, d) - 1
    if math.gcd(b, d) != 1:
        raise ValueError("the alternating formula needs gcd(b, d) = 1")
    total = bnomial(m, Fraction(k, d), b)
    for s in sylvester_set(b, d):
        total += bnomial(m, Fraction(k - 1 - s, d), b)
        total -= bnomial(m, Fraction(k - s, d), b)
    return total
