import pytest
import sympy
from hypothesis import given, strategies as st

from sieve_lab.poly import IntPoly, NonExactDivision, divmod_poly, exact_div, format_poly

X = sympy.Symbol("x")
coeff_lists = st.lists(st.integers(-50, 50), max_size=8)


def to_sympy(p: IntPoly):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], X)


def from_sympy(sp) -> IntPoly:
    return IntPoly([int(c) for c in reversed(sp.all_coeffs())])


def test_trailing_zeros_are_trimmed():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).is_zero()
    assert IntPoly().degree == -1


def test_indexing_outside_range_is_zero():
    p = IntPoly([3, 4])
    assert p[1] == 4
    assert p[7] == 0


def test_equality_with_integers():
    assert IntPoly([5]) == 5
    assert IntPoly() == 0
    assert IntPoly([0, 1]) != 1


@given(coeff_lists, coeff_lists)
def test_ring_operations_match_sympy(a, b):
    p, q = IntPoly(a), IntPoly(b)
    assert to_sympy(p + q) == to_sympy(p) + to_sympy(q)
    assert to_sympy(p - q) == to_sympy(p) - to_sympy(q)
    assert to_sympy(p * q) == to_sympy(p) * to_sympy(q)


@given(coeff_lists, st.integers(0, 4))
def test_power_matches_repeated_product(a, e):
    p = IntPoly(a)
    expected = IntPoly([1])
    for _ in range(e):
        expected = expected * p
    assert p**e == expected


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_exact_division_recovers_factor(a, b):
    p, q = IntPoly(a), IntPoly(b)
    assert exact_div(p * q, q) == p


def test_non_exact_division_raises():
    with pytest.raises(NonExactDivision):
        exact_div(IntPoly([1, 0, 1]), IntPoly([1, 1]))
    with pytest.raises(ZeroDivisionError):
        exact_div(IntPoly([1]), IntPoly())


def test_divmod_over_monic_divisor_matches_sympy():
    p = IntPoly([3, -1, 4, 1, -5, 9])
    q = IntPoly([2, 0, 1])
    quo, rem = divmod_poly(p, q)
    sq, sr = sympy.div(to_sympy(p), to_sympy(q))
    assert quo == from_sympy(sq)
    assert rem == from_sympy(sr)


def test_dilate_and_shift():
    p = IntPoly([1, 2])
    assert p.dilate(3) == IntPoly([1, 0, 0, 2])
    assert p.shift(2) == IntPoly([0, 0, 1, 2])
    with pytest.raises(ValueError):
        p.shift(-1)


def test_evaluation():
    assert IntPoly([1, 1, 1])(2) == 7
    assert IntPoly([1, -1])(1) == 0


def test_ascending_text_and_latex_rendering():
    p = IntPoly([1, -1, 0, 2])
    assert format_poly(p) == "1 - t + 2*t^3"
    assert format_poly(p, "q", "latex") == "1 - q + 2q^{3}"
    assert format_poly(IntPoly([0, -1])) == "-t"
    assert format_poly(IntPoly()) == "0"
