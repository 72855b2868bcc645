import math
from itertools import product

import pytest
from hypothesis import given, strategies as st

from sieve_lab.multisets import (
    Action,
    BoundedVector,
    CellStatus,
    csp_report,
    enumerate_vectors,
    fixed_count,
    gf_from_enumeration,
    rho,
    stat,
    tau,
)
from sieve_lab.qanalogs import UNBOUNDED, bnomial, qbnomial


def brute_fixed(n, k, b, action, power):
    count = 0
    for x in product(range(b), repeat=n):
        if sum(x) != k:
            continue
        y = list(x)
        for _ in range(power):
            if action == "rho":
                y = y[1:] + y[:1]
            elif n > 2:
                y = y[1:-1] + y[:1] + y[-1:]
        count += tuple(y) == x
    return count


def test_vector_validation():
    with pytest.raises(ValueError):
        BoundedVector((0, 3), 3)
    with pytest.raises(ValueError):
        BoundedVector((-1,), 3)
    x = BoundedVector((1, 0, 2), 3)
    assert (x.n, x.weight) == (3, 3)


def test_enumeration_is_lexicographic_and_complete():
    xs = [x.entries for x in enumerate_vectors(3, 3, 3)]
    assert xs == sorted(xs)
    assert xs == sorted(x for x in product(range(3), repeat=3) if sum(x) == 3)
    assert len(list(enumerate_vectors(4, 3, UNBOUNDED))) == math.comb(6, 3)
    assert list(enumerate_vectors(2, -1, 3)) == []


@given(st.integers(0, 6), st.integers(0, 12), st.integers(2, 4))
def test_enumeration_size_is_bnomial(n, k, b):
    assert sum(1 for _ in enumerate_vectors(n, k, b)) == bnomial(n, k, b)


def test_stat_and_generating_function():
    assert stat((4, 1, 2)) == 5
    for n in range(5):
        for b in (2, 3):
            for k in range((b - 1) * n + 1):
                assert gf_from_enumeration(n, k, b) == qbnomial(n, k, b)


def test_rotations():
    x = BoundedVector((1, 2, 0, 1), 3)
    assert rho(x).entries == (2, 0, 1, 1)
    assert tau(x).entries == (2, 0, 1, 1)
    y = BoundedVector((0, 1, 2, 2), 3)
    assert tau(y).entries == (1, 2, 0, 2)
    assert tau(BoundedVector((1, 2), 3)).entries == (1, 2)
    assert Action.RHO.apply(x, 4) == x
    assert Action.TAU.apply(y, 3) == y
    assert Action.TAU.order(5) == 4


@pytest.mark.parametrize("n,b", [(n, b) for n in range(1, 6) for b in (2, 3, 4)])
def test_fixed_count_matches_brute_force(n, b):
    for k in range((b - 1) * n + 1):
        for power in range(n + 1):
            assert fixed_count(n, k, b, "rho", power) == brute_fixed(n, k, b, "rho", power)
            assert fixed_count(n, k, b, "tau", power) == brute_fixed(n, k, b, "tau", power)


def test_counterexample_cell():
    report = csp_report(3, 3)
    cell = report.cell("rho", 3, 3)
    assert (cell.specialization, cell.fixed, cell.gcd) == (-2, 1, 3)
    assert cell.status is CellStatus.EXPECTED_DIVERGENCE
    assert report.ok


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("b", (2, 3, 4, 5))
def test_reports_have_no_failures(n, b):
    report = csp_report(n, b)
    assert report.failures == []
    for c in report.cells:
        if c.gcd == 1:
            assert c.status is CellStatus.VERIFIED


def test_report_layout():
    report = csp_report(4, 2)
    rho_cells = [c for c in report.cells if c.action is Action.RHO]
    tau_cells = [c for c in report.cells if c.action is Action.TAU]
    assert len(rho_cells) == 3 * 5
    assert len(tau_cells) == 2 * 5
    with pytest.raises(KeyError):
        report.cell("rho", 3, 0)
    with pytest.raises(ValueError):
        csp_report(0, 2)
