import math

import pytest
from hypothesis import given, strategies as st

from sieve_lab import coins
from sieve_lab.poly import IntPoly
from sieve_lab.qanalogs import multisect
from sieve_lab.rootgf import gf_case_c

coprime = st.tuples(st.integers(1, 12), st.integers(1, 12)).filter(lambda p: math.gcd(*p) == 1)
coprime2 = st.tuples(st.integers(2, 9), st.integers(2, 9)).filter(lambda p: math.gcd(*p) == 1)


def brute_denumerant(b, d, n):
    return sum(1 for k in range(n + 1) for l in range(n + 1) if k * b + l * d == n)


def test_sylvester_set_seven_five():
    assert coins.sylvester_set(7, 5) == (1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23)
    assert coins.sylvester_set(1, 5) == ()


@given(coprime)
def test_sylvester_set_size_and_identity(p):
    b, d = p
    s = coins.sylvester_set(b, d)
    assert len(s) == (b - 1) * (d - 1) // 2
    assert all(brute_denumerant(b, d, n) == 0 for n in s)
    assert coins.sylvester_identity(b, d) == coins.sylvester_quotient(b, d)
    assert coins.sylvester_identity(b, d) == coins.sylvester_identity(d, b)


def test_not_coprime_raises():
    with pytest.raises(coins.NotCoprime):
        coins.sylvester_set(4, 6)
    with pytest.raises(coins.NotCoprime):
        coins.CoinPair(3, 9)
    with pytest.raises(ValueError):
        coins.rectangle_decomposition(1, 5)


@given(coprime, st.integers(0, 250))
def test_denumerant_and_blocks(p, n):
    b, d = p
    nu = coins.denumerant(b, d, n)
    assert nu == brute_denumerant(b, d, n)
    pt = coins.locate(b, d, n)
    assert pt.label == n and pt.in_row_abacus()
    assert coins.block_index(b, d, n) == nu


def test_worked_labels():
    assert coins.locate(7, 5, 41) == coins.AbacusPoint(4, 3, 7, 5)
    assert coins.block_index(7, 5, 41) == 1
    assert coins.locate(7, 5, 88) == coins.AbacusPoint(12, 4, 7, 5)
    assert coins.block_index(7, 5, 88) == 2
    assert coins.block_index(7, 5, 23) == 0
    assert coins.denumerant(7, 5, -3) == 0
    with pytest.raises(ValueError):
        coins.locate(7, 5, -1)


def test_congruence_data_seven_five():
    cd = coins.congruence_data(7, 5)
    assert cd.beta == (0, 3, 6, 2, 5, 1, 4)
    assert cd.delta == (0, 3, 1, 4, 2)
    assert cd.gamma == (0, 4, 1, 5, 2)


def test_rectangles_seven_five():
    x0, x1 = coins.rectangle_labels(7, 5)
    assert x0 == [0, 5, 10, 7, 12, 17, 14, 19, 24]
    assert x1 == [1, 6, 11, 16, 8, 13, 18, 23]
    pos, neg = coins.rectangle_decomposition(7, 5)
    assert pos.support() == sorted(x0)
    assert neg.support() == sorted(x1)


@given(coprime2)
def test_rectangle_decomposition(p):
    b, d = p
    cd = coins.congruence_data(b, d)
    for r in range(b):
        assert (cd.beta[r] * d) % b == r
    for r in range(d):
        assert (cd.delta[r] * b) % d == r
        assert cd.delta[r] * b == cd.gamma[r] * d + r
    pos, neg = coins.rectangle_decomposition(b, d)
    assert pos - neg == coins.sylvester_quotient(b, d)
    assert not set(pos.support()) & set(neg.support())
    assert sum(pos.coeffs) == cd.beta[1] * cd.delta[1]
    assert sum(neg.coeffs) == (b - cd.beta[1]) * (d - cd.delta[1])


def test_multisections_seven_five():
    q3, q4 = IntPoly([1, 1, 1]), IntPoly([1, 1, 1, 1])
    expected = [q3, -q4, q3.shift(1), -q4.shift(1), q3.shift(2)]
    assert [coins.multisection_f(7, 5, r) for r in range(5)] == expected
    assert [coins.sign(7, 5, r) for r in range(5)] == [1, -1, 1, -1, 1]


@given(coprime2)
def test_multisections_match_slices(p):
    b, d = p
    quotient = coins.sylvester_quotient(b, d)
    for r in range(d):
        assert coins.multisection_f(b, d, r) == multisect(quotient, d, r)


@given(coprime2, st.integers(1, 3))
def test_twisted_slices_are_signed_unimodal(p, m):
    b, d = p
    n = m * d - 1
    gf = gf_case_c(n, d, b)
    for r in range(d):
        g, eps = coins.corollary_g(b, d, n, r)
        assert g == multisect(gf, d, r)
        assert all(c >= 0 for c in eps * g)
        assert coins.is_unimodal((eps * g).coeffs)


def test_corollary_g_needs_divisibility():
    with pytest.raises(ValueError):
        coins.corollary_g(7, 5, 5, 0)


def test_unimodality():
    assert coins.is_unimodal([1, 2, 2, 3, 1, 0])
    assert coins.is_unimodal([])
    assert not coins.is_unimodal([1, 0, 1])


def test_render_marks_blocks_and_row_abacus():
    text = coins.render_abacus(7, 5, range(-7, 8), range(6))
    lines = text.splitlines()
    assert len(lines) == 7
    assert "[0]" in lines[5] and "[41]" in lines[2]
    row5 = lines[0]
    assert "[" not in row5 and " 35" in row5
    assert lines[5].count("|") == 3
    assert lines[4].split()[1:3] == ["|", "."]
