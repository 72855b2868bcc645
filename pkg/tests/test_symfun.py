import cmath
import math
from itertools import combinations, combinations_with_replacement, product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from sieve_lab.cyclotomic import as_integer, reduce
from sieve_lab.partitions import Partition, partitions
from sieve_lab.qanalogs import UNBOUNDED, bnomial, qbnomial
from sieve_lab.symfun import (
    NonSymmetric,
    SymPoly,
    VariableCountMismatch,
    bnomial_partition_sum,
    cauchy_coefficients,
    cauchy_expansions,
    corollary_hbpow,
    corollary_hbpow_reduced,
    e_k,
    e_partition,
    from_schur,
    h_k,
    h_k_b,
    h_k_b_direct,
    lemma_pow,
    m_basis,
    monomial_residues,
    p_k,
    p_partition,
    petrie_coefficients,
    power_expansion_check,
    principal_exponents,
    schur,
    specialize,
    specialize_int,
    to_schur,
)

ZS = sympy.symbols("z1:5")


def to_sympy(f: SymPoly):
    zs = ZS[: f.n]
    return sympy.expand(sum(c * sympy.prod(z**a for z, a in zip(zs, alpha)) for alpha, c in f.monomials()))


def from_sympy(expr, n) -> SymPoly:
    poly = sympy.Poly(sympy.expand(expr), *ZS[:n])
    return SymPoly.from_monomials(n, {tuple(m): int(c) for m, c in poly.terms()})


def alternant_schur(lam, n):
    # bialternant a_{lambda+delta} / a_delta, via sympy determinants
    zs = ZS[:n]
    lam = list(lam) + [0] * (n - len(lam))
    num = sympy.Matrix(n, n, lambda i, j: zs[j] ** (lam[i] + n - 1 - i)).det()
    den = sympy.Matrix(n, n, lambda i, j: zs[j] ** (n - 1 - i)).det()
    return sympy.cancel(num / den)


def brute_hkb(k, b, n):
    # sum over exponent vectors with entries below b
    return SymPoly.from_monomials(n, {a: 1 for a in product(range(min(b, k + 1)), repeat=n) if sum(a) == k})


def test_construction_checks_symmetry():
    with pytest.raises(NonSymmetric):
        SymPoly.from_monomials(2, {(1, 0): 1})
    with pytest.raises(NonSymmetric):
        SymPoly.from_monomials(2, {(1, 0): 1, (0, 1): 2})
    with pytest.raises(VariableCountMismatch):
        e_k(1, 2) + e_k(1, 3)
    with pytest.raises(ValueError):
        SymPoly(1, {(1, 1): 1})


@pytest.mark.parametrize("n", range(1, 5))
def test_classical_bases_match_sympy(n):
    zs = ZS[:n]
    for k in range(5):
        assert to_sympy(e_k(k, n)) == sympy.expand(sum(sympy.prod(c) for c in combinations(zs, k)))
        assert to_sympy(p_k(k, n)) == (sum(z**k for z in zs) if k else 1)
        hk = sum(sympy.prod(c) for c in combinations_with_replacement(zs, k)) if k else 1
        assert to_sympy(h_k(k, n)) == sympy.expand(hk)


monomials_3 = st.dictionaries(
    st.lists(st.integers(1, 3), max_size=3).map(lambda xs: Partition(sorted(xs, reverse=True))),
    st.integers(-3, 3),
    max_size=4,
)


@settings(max_examples=40, deadline=None)
@given(monomials_3, monomials_3)
def test_multiplication_matches_sympy(a, b):
    f, g = SymPoly(3, a), SymPoly(3, b)
    assert to_sympy(f * g) == sympy.expand(to_sympy(f) * to_sympy(g))
    assert to_sympy(f + g) == sympy.expand(to_sympy(f) + to_sympy(g))


def test_small_products():
    assert e_k(1, 2) * e_k(1, 2) == m_basis((2,), 2) + 2 * m_basis((1, 1), 2)
    assert p_partition(Partition((2, 1)), 2) == m_basis((3,), 2) + m_basis((2, 1), 2)
    assert e_partition(Partition((1, 1)), 3) == m_basis((2,), 3) + 2 * m_basis((1, 1), 3)


@pytest.mark.parametrize("n", range(1, 4))
def test_schur_matches_bialternant(n):
    for k in range(6):
        for lam in partitions(k, max_length=n):
            assert to_sympy(schur(lam, n)) == sympy.expand(alternant_schur(lam, n))


def test_schur_examples():
    assert schur(Partition((2, 1)), 3) == m_basis((2, 1), 3) + 2 * m_basis((1, 1, 1), 3)
    assert schur(Partition((1, 1, 1, 1)), 3) == 0
    assert schur(Partition((3,)), 4) == h_k(3, 4)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_schur_round_trip(n):
    for k in range(6):
        f = h_k(k, n) * 3 - e_k(k, n)
        assert from_schur(to_schur(f), n) == f


@pytest.mark.parametrize("k,b,n", [(k, b, n) for k in range(7) for b in (2, 3, 4) for n in (1, 2, 3, 4)])
def test_hkb_is_the_bounded_sum(k, b, n):
    assert h_k_b(k, b, n) == brute_hkb(k, b, n)
    assert h_k_b(k, b, n) == h_k_b_direct(k, b, n)


def test_hkb_extremes():
    assert h_k_b(3, 2, 4) == e_k(3, 4)
    assert h_k_b(3, UNBOUNDED, 4) == h_k(3, 4)
    assert h_k_b(3, 10, 4) == h_k(3, 4)
    with pytest.raises(ValueError):
        h_k_b(2, 1, 3)


def test_petrie_coefficients():
    assert petrie_coefficients(4, 3, 4) == {Partition((2, 2)): 1, Partition((1, 1, 1, 1)): -1}
    for k in range(8):
        for b in (2, 3, 4):
            assert set(petrie_coefficients(k, b, k).values()) <= {-1, 1}
    with pytest.raises(ValueError):
        petrie_coefficients(4, 3, 3)


def numeric_specialize(f: SymPoly, exps, d):
    w = cmath.exp(2j * cmath.pi / d)
    return sum(c * math.prod(w ** (e * a) for e, a in zip(exps, alpha))
               for alpha, c in f.monomials())


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_monomial_residues_match_numeric(d):
    for n in range(1, 5):
        exps = tuple(range(n))
        for k in range(5):
            for lam in partitions(k, max_length=n):
                value = specialize(m_basis(lam, n), exps, d)
                residues = monomial_residues(lam, exps, d)
                assert sum(residues) == sum(1 for _ in m_basis(lam, n).monomials())
                assert abs(numeric_specialize(m_basis(lam, n), exps, d)
                           - sum(c * cmath.exp(2j * cmath.pi * r / d) for r, c in enumerate(value.rep.coeffs))) < 1e-8


def test_specialization_equals_q_analogue():
    for n in range(1, 6):
        for b in (2, 3):
            for d in range(1, n + 2):
                for k in range((b - 1) * n + 1):
                    got = specialize(h_k_b(k, b, n), principal_exponents(n, "a"), d)
                    assert got == reduce(qbnomial(n, k, b), d)
    with pytest.raises(VariableCountMismatch):
        specialize(e_k(1, 2), (0, 1, 2), 3)


def test_principal_exponents():
    assert principal_exponents(3, "a") == (0, 1, 2)
    assert principal_exponents(3, "c") == (1, 2, 3)


def test_partition_sum_worked_values():
    assert bnomial_partition_sum(3, 3, 2) == 1
    assert bnomial_partition_sum(3, 3, 3) == 7
    assert [bnomial_partition_sum(3, 3, b) for b in (4, 5, 9)] == [10, 10, 10]
    assert bnomial_partition_sum(3, 3, UNBOUNDED) == 10


@pytest.mark.parametrize("b", range(2, 6))
def test_power_sum_identity_and_all_ones(b):
    for k in range(8):
        for n in range(6):
            assert power_expansion_check(k, b, n)
            assert bnomial_partition_sum(n, k, b) == bnomial(n, k, b)


@pytest.mark.parametrize("n", range(1, 8))
def test_power_sums_at_principal_points(n):
    for case, m in (("a", n), ("b", n - 1), ("c", n + 1)):
        if m < 1:
            continue
        for d in range(1, m + 1):
            if m % d:
                continue
            for k in range(7):
                for lam in partitions(k):
                    f = p_partition(lam, n)
                    v = numeric_specialize(f, principal_exponents(n, case), d)
                    assert abs(v - lemma_pow(lam, n, d, case)) < 1e-6


def test_partition_sum_values_at_roots():
    for n in range(1, 8):
        for b in (2, 3, 4):
            for d in range(1, n + 1):
                if n % d:
                    continue
                for k in range((b - 1) * n + 1):
                    expected = as_integer(reduce(qbnomial(n, k, b), d))
                    assert corollary_hbpow(n, k, b, d, "a") == expected
                    if math.gcd(b, d) == 1:
                        assert corollary_hbpow_reduced(n, k, b, d) == expected


def test_reduced_form_fails_when_gcd_exceeds_one():
    # for (n, b, d) = (3, 3, 3) the reduced sum gives the coprime answer 1, the value is -2
    assert corollary_hbpow_reduced(3, 3, 3, 3) == 1
    assert corollary_hbpow(3, 3, 3, 3, "a") == -2


@pytest.mark.parametrize("b", [2, 3, 4])
def test_cauchy_expansions(b):
    for k in range(6):
        coeffs = cauchy_coefficients(k, b)
        assert set(coeffs) == {"p", "e", "m", "s_conj"}
        for n in (3, 4, 5):
            target = h_k_b(k, b, n)
            for name, value in cauchy_expansions(k, b, n).items():
                assert value == target, name


def test_specialize_int_requires_rational_value():
    assert specialize_int(e_k(2, 2), (1, 2), 3) == 1
    with pytest.raises(ArithmeticError):
        specialize_int(e_k(1, 1), (1,), 3)
