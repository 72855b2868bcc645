"""Verification sweeps covering every acceptance criterion.

Each ``criterion_*`` function returns a :class:`CriterionResult`. The sweeps
are shared by ``sieve-lab verify`` and the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import coins
from .cyclotomic import as_integer, reduce
from .multisets import Action, CellStatus, csp_report, fixed_count
from .partitions import Partition, partitions
from .poly import IntPoly
from .qanalogs import bnomial, cyclotomic, divisors, gaussian_binomial, multisect, q_integer, qbnomial
from .report import ReportRow, Status
from .rootgf import (
    Case,
    alternating_formula,
    closed_form,
    corollary_sums,
    direct_value,
    ek_root_formula,
    ek_root_formula_odd,
    gf_case_c,
)
from .symfun import (
    bnomial_partition_sum,
    cauchy_expansions,
    corollary_hbpow,
    e_k,
    e_partition,
    h_k_b,
    lemma_pow,
    m_basis,
    p_partition,
    petrie_coefficients,
    power_expansion_check,
    principal_exponents,
    schur,
    specialize,
)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    rows: tuple[ReportRow, ...]

    @property
    def failures(self) -> list[ReportRow]:
        return [r for r in self.rows if r.status is Status.FAILURE]

    @property
    def passed(self) -> bool:
        return bool(self.rows) and not self.failures

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        counts = {s: sum(1 for r in self.rows if r.status is s) for s in Status}
        detail = ", ".join(f"{v} {s.value}" for s, v in counts.items() if v)
        return f"[{verdict}] criterion {self.number:>2}: {self.title} ({detail})"


def _result(number: int, title: str, rows: list[ReportRow]) -> CriterionResult:
    return CriterionResult(number, title, tuple(rows))


def _case_orders(n: int) -> list[tuple[Case, int]]:
    """(case, m) with m the integer that d must divide."""
    out = []
    if n >= 1:
        out.append((Case.A, n))
    if n >= 2:
        out.append((Case.B, n - 1))
    out.append((Case.C, n + 1))
    return out


# -- criterion 1 -----------------------------------------------------------


def criterion_1(max_n: int = 8, bounds=(2, 3, 4, 5)) -> CriterionResult:
    rows = []
    for n in range(1, max_n + 1):
        for b in bounds:
            report = csp_report(n, b)
            for d in divisors(n):
                if math.gcd(b, d) != 1:
                    continue
                for k in range((b - 1) * n + 1):
                    spec = as_integer(reduce(qbnomial(n, k, b), d))
                    fixed = fixed_count(n, k, b, Action.RHO, n // d)
                    formula = bnomial(n // d, Fraction(k, d), b)
                    p = dict(n=n, b=b, d=d, k=k)
                    rows.append(ReportRow.compare("rho: spec = fixed", p, fixed, spec))
                    rows.append(ReportRow.compare("rho: fixed = bnomial(n/d, k/d)", p, formula, fixed))
                    rows.append(ReportRow.compare("rho: report cell", p, CellStatus.VERIFIED.value,
                                                  report.cell("rho", d, k).status.value))
            if n >= 2:
                for d in divisors(n - 1):
                    if math.gcd(b, d) != 1:
                        continue
                    m = n - 1
                    for k in range((b - 1) * n + 1):
                        spec = as_integer(reduce(qbnomial(n, k, b), d))
                        fixed = fixed_count(n, k, b, Action.TAU, m // d)
                        formula = sum(bnomial(m // d, Fraction(k - ell, d), b) for ell in range(b))
                        p = dict(n=n, b=b, d=d, k=k)
                        rows.append(ReportRow.compare("tau: spec = fixed", p, fixed, spec))
                        rows.append(ReportRow.compare("tau: fixed = sum bnomial", p, formula, fixed))
                        rows.append(ReportRow.compare("tau: report cell", p, CellStatus.VERIFIED.value,
                                                      report.cell("tau", d, k).status.value))
    return _result(1, "bounded-multiset CSP sweep (rho and tau)", rows)


# -- criterion 2 -----------------------------------------------------------


def criterion_2() -> CriterionResult:
    cell = csp_report(3, 3).cell("rho", 3, 3)
    p = dict(n=3, b=3, d=3, k=3)
    rows = [
        ReportRow.compare("specialization", p, -2, cell.specialization),
        ReportRow.compare("fixed count", p, 1, cell.fixed),
        ReportRow.compare("cell status", p, CellStatus.EXPECTED_DIVERGENCE.value, cell.status.value),
        ReportRow.compare("q-polynomial", p, IntPoly([0, 1, 2, 1, 2, 1]), qbnomial(3, 3, 3)),
    ]
    return _result(2, "b=d=n=k=3 counterexample", rows)


# -- criteria 3 and 4 ------------------------------------------------------


def criterion_3(max_n: int = 8, max_b: int = 6) -> CriterionResult:
    rows = []
    for n in range(1, max_n + 1):
        for b in range(2, max_b + 1):
            for case, m in _case_orders(n):
                for d in divisors(m):
                    gf = closed_form(case, n, d, b)
                    top = max((b - 1) * n, gf.degree)
                    computed = [direct_value(case, n, k, d, b) for k in range(top + 1)]
                    expected = [gf[k] for k in range(top + 1)]
                    p = dict(n=n, b=b, d=d, g=math.gcd(b, d))
                    rows.append(ReportRow.compare(f"case {case.value} coefficients", p, expected, computed))
    return _result(3, "closed-form generating functions vs cyclotomic evaluation (all gcd)", rows)


def criterion_4(max_n: int = 8, max_b: int = 6) -> CriterionResult:
    rows = []
    for n in range(1, max_n + 1):
        for b in range(2, max_b + 1):
            for case, m in _case_orders(n):
                for d in divisors(m):
                    gf = closed_form(case, n, d, b)
                    p = dict(n=n, b=b, d=d)
                    rows.append(ReportRow.compare(f"case {case.value} t=1 sum", p,
                                                  corollary_sums(n, d, b, case), gf(1)))
                    direct = sum(direct_value(case, n, k, d, b) for k in range((b - 1) * n + 1))
                    rows.append(ReportRow.compare(f"case {case.value} direct sum", p,
                                                  corollary_sums(n, d, b, case), direct))
    for p_ in (3, 5, 7):
        for b in (2, 3, 4):
            if b % p_ == 0:
                continue
            prod = IntPoly.constant(1)
            for i in range(1, p_):
                prod = prod * q_integer(b).dilate(i)
            value = as_integer(reduce(prod, p_))
            rows.append(ReportRow.compare("q-Fermat product mod [p]_q", dict(p=p_, b=b), 1, value))
            rows.append(ReportRow.compare("Phi_p = [p]_q", dict(p=p_), q_integer(p_), cyclotomic(p_)))
    return _result(4, "t=1 sums and the q-Fermat congruence", rows)


# -- criteria 5 to 8 -------------------------------------------------------

S75 = (1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23)
QUOTIENT_75_POS = (0, 5, 7, 10, 12, 14, 17, 19, 24)
QUOTIENT_75_NEG = (1, 6, 8, 11, 13, 16, 18, 23)


def _coprime_pairs(limit: int, low: int = 1):
    for b in range(low, limit + 1):
        for d in range(low, limit + 1):
            if math.gcd(b, d) == 1:
                yield b, d


def criterion_5(limit: int = 12) -> CriterionResult:
    rows = [ReportRow.compare("S_{7,5}", dict(b=7, d=5), list(S75), list(coins.sylvester_set(7, 5)))]
    printed = IntPoly.from_terms({**{e: 1 for e in QUOTIENT_75_POS}, **{e: -1 for e in QUOTIENT_75_NEG}})
    rows.append(ReportRow.compare("[7]_{t^5}/[7]_t", dict(b=7, d=5), printed, coins.sylvester_quotient(7, 5)))
    rows.append(ReportRow.compare("S_{3,5}(t)", dict(b=3, d=5), IntPoly.from_terms({1: 1, 2: 1, 4: 1, 7: 1}),
                                  coins.sylvester_poly(3, 5)))
    for b, d in _coprime_pairs(limit):
        p = dict(b=b, d=d)
        rows.append(ReportRow.compare("#S", p, (b - 1) * (d - 1) // 2, len(coins.sylvester_set(b, d))))
        rows.append(ReportRow.compare("1+(t-1)S = [b]_{t^d}/[b]_t", p,
                                      coins.sylvester_quotient(b, d), coins.sylvester_identity(b, d)))
        rows.append(ReportRow.compare("b<->d symmetry", p,
                                      coins.sylvester_quotient(d, b), coins.sylvester_identity(b, d)))
        if b > 1 and d > 1:
            rows.append(ReportRow.compare("Frobenius number", p, b * d - b - d, max(coins.sylvester_set(b, d))))
    return _result(5, "Sylvester sets and the coin quotient identity", rows)


def criterion_6(limit: int = 9) -> CriterionResult:
    rows = []
    for b, d in _coprime_pairs(limit):
        for n in range(2 * b * d + 1):
            p = dict(b=b, d=d, n=n)
            nu = coins.denumerant(b, d, n)
            rows.append(ReportRow.compare("block = denumerant", p, nu, coins.block_index(b, d, n)))
            if n >= b * d:
                rows.append(ReportRow.compare("shift law", p, nu - 1, coins.denumerant(b, d, n - b * d)))
    for n, nu in ((41, 1), (88, 2)):
        rows.append(ReportRow.compare("worked label", dict(b=7, d=5, n=n), nu, coins.denumerant(7, 5, n)))
        rows.append(ReportRow.compare("worked block", dict(b=7, d=5, n=n), nu, coins.block_index(7, 5, n)))
    pt = coins.locate(7, 5, 41)
    rows.append(ReportRow.compare("position of 41", dict(b=7, d=5), (4, 3), (pt.x, pt.y)))
    return _result(6, "double-abacus blocks give denumerants", rows)


def criterion_7(limit: int = 9) -> CriterionResult:
    cd = coins.congruence_data(7, 5)
    p75 = dict(b=7, d=5)
    rows = [
        ReportRow.compare("beta", p75, [0, 3, 6, 2, 5, 1, 4], list(cd.beta)),
        ReportRow.compare("delta", p75, [0, 3, 1, 4, 2], list(cd.delta)),
        ReportRow.compare("gamma", p75, [0, 4, 1, 5, 2], list(cd.gamma)),
    ]
    x0, x1 = coins.rectangle_labels(7, 5)
    rows.append(ReportRow.compare("lambda(X_0)", p75, [0, 5, 10, 7, 12, 17, 14, 19, 24], x0))
    rows.append(ReportRow.compare("lambda(X_1)", p75, [1, 6, 11, 16, 8, 13, 18, 23], x1))
    pos, neg = coins.rectangle_decomposition(7, 5)
    rows.append(ReportRow.compare("positive support", p75, sorted(x0), pos.support()))
    rows.append(ReportRow.compare("negative support", p75, sorted(x1), neg.support()))
    for b, d in _coprime_pairs(limit, low=2):
        cd = coins.congruence_data(b, d)
        b1, d1 = cd.beta[1], cd.delta[1]
        pos, neg = coins.rectangle_decomposition(b, d)
        quotient = coins.sylvester_quotient(b, d)
        p = dict(b=b, d=d)
        rows.append(ReportRow.compare("pos - neg = quotient", p, quotient, pos - neg))
        rows.append(ReportRow.compare("disjoint supports", p, [], sorted(set(pos.support()) & set(neg.support()))))
        rows.append(ReportRow.compare("#positive", p, b1 * d1, sum(1 for c in pos if c == 1)))
        rows.append(ReportRow.compare("#negative", p, (b - b1) * (d - d1), sum(1 for c in neg if c == 1)))
        rows.append(ReportRow.compare("0/1 coefficients", p, True,
                                      set(pos.coeffs) <= {0, 1} and set(neg.coeffs) <= {0, 1}))
        x0, x1 = coins.rectangle_labels(b, d)
        rows.append(ReportRow.compare("lattice rectangles", p, (sorted(x0), sorted(x1)),
                                      (pos.support(), neg.support())))
        recon = IntPoly()
        for r in range(d):
            recon = recon + coins.multisection_f(b, d, r).dilate(d).shift(r)
        rows.append(ReportRow.compare("multisection reconstruction", p, quotient, recon))
    return _result(7, "rectangle decomposition and multisections", rows)


def criterion_8(limit: int = 7) -> CriterionResult:
    rows = []
    for b, d in _coprime_pairs(limit, low=2):
        for mult in (1, 2, 3):
            n = mult * d - 1
            gf = gf_case_c(n, d, b)
            recon = IntPoly()
            for r in range(d):
                g, eps = coins.corollary_g(b, d, n, r)
                p = dict(b=b, d=d, n=n, r=r)
                signed = eps * g
                rows.append(ReportRow.compare("eps*g nonnegative", p, True, all(c >= 0 for c in signed)))
                rows.append(ReportRow.compare("eps*g unimodal", p, True, coins.is_unimodal(signed.coeffs)))
                rows.append(ReportRow.compare("slice", p, multisect(gf, d, r), g))
                recon = recon + g.dilate(d).shift(r)
            rows.append(ReportRow.compare("slices reassemble", dict(b=b, d=d, n=n), gf, recon))
    for n in (4, 9, 14):
        for k in range(6 * n + 1):
            v = direct_value(Case.C, n, k, 5, 7)
            want_nonneg = k % 5 in (0, 2, 4)
            ok = v >= 0 if want_nonneg else v <= 0
            rows.append(ReportRow.compare("(7,5) sign pattern", dict(n=n, k=k), True, ok))
            rows.append(ReportRow.compare("alternating formula", dict(n=n, k=k), v,
                                          alternating_formula(n, k, 7, 5)))
    return _result(8, "signed unimodal multisections", rows)


# -- criteria 9 to 12 ------------------------------------------------------


def criterion_9(max_k: int = 9, max_b: int = 6, max_n: int = 6) -> CriterionResult:
    rows = []
    for b, want in ((4, 10), (5, 10), (10, 10), (3, 7), (2, 1)):
        rows.append(ReportRow.compare("C(3,3)^(b) partition sum", dict(b=b), want, bnomial_partition_sum(3, 3, b)))
    for k in range(max_k + 1):
        for b in range(2, max_b + 1):
            for n in range(max_n + 1):
                p = dict(k=k, b=b, n=n)
                rows.append(ReportRow.compare("power-sum identity", p, True, power_expansion_check(k, b, n)))
                rows.append(ReportRow.compare("all-ones value", p, bnomial(n, k, b), bnomial_partition_sum(n, k, b)))
    return _result(9, "power-sum expansion of h_k^(b)", rows)


def criterion_10(max_size: int = 8, max_n: int = 9, max_b: int = 4) -> CriterionResult:
    rows = []
    for n in range(1, max_n + 1):
        for case, m in _case_orders(n):
            exps = principal_exponents(n, case.value)
            for d in divisors(m):
                for size in range(max_size + 1):
                    for lam in partitions(size):
                        p = dict(n=n, d=d, lam="".join(map(str, lam)) or "0")
                        got = as_integer(specialize(p_partition(lam, n), exps, d))
                        rows.append(ReportRow.compare(f"p_lambda case {case.value}", p,
                                                      lemma_pow(lam, n, d, case.value), got))
    for n in range(1, max_n + 1):
        for b in range(2, max_b + 1):
            for case, m in _case_orders(n):
                for d in divisors(m):
                    for k in range((b - 1) * n + 1):
                        p = dict(n=n, b=b, d=d, k=k)
                        rows.append(ReportRow.compare(f"partition sum case {case.value}", p,
                                                      direct_value(case, n, k, d, b),
                                                      corollary_hbpow(n, k, b, d, case.value)))
    return _result(10, "power sums at roots of unity", rows)


def criterion_11(max_k: int = 6, max_b: int = 4, ns=(4, 5, 6)) -> CriterionResult:
    rows = []
    for k in range(max_k + 1):
        for b in range(2, max_b + 1):
            pt = tuple(range(1, b))
            for lam in partitions(k):
                for name, f in (("p", p_partition(lam, b - 1)), ("e", e_partition(lam, b - 1)),
                                ("m", m_basis(lam, b - 1)), ("s'", schur(lam.conjugate(), b - 1))):
                    value = as_integer(specialize(f, pt, b))
                    rows.append(ReportRow.compare(f"{name}_lambda at zeta is an integer",
                                                  dict(k=k, b=b, lam="".join(map(str, lam)) or "0"),
                                                  True, value is not None))
            for n in ns:
                target = h_k_b(k, b, n)
                for name, value in cauchy_expansions(k, b, n).items():
                    rows.append(ReportRow.compare(f"{name} expansion", dict(k=k, b=b, n=n), True, value == target))
    return _result(11, "dual Cauchy expansions", rows)


def criterion_12(max_k: int = 8, max_b: int = 5) -> CriterionResult:
    rows = []
    for k in range(max_k + 1):
        for b in range(2, max_b + 1):
            for n in (k, k + 1):
                coeffs = petrie_coefficients(k, b, n)
                values = sorted(set(coeffs.values()))
                rows.append(ReportRow.compare("Schur coefficients in {0,1,-1}", dict(k=k, b=b, n=n), True,
                                              set(values) <= {-1, 0, 1}))
    return _result(12, "Petrie property", rows)


# -- criterion 13 ----------------------------------------------------------


def criterion_13(max_n: int = 9) -> CriterionResult:
    rows = []
    for n in range(1, max_n + 1):
        ds = set(divisors(n)) | (set(divisors(n - 1)) if n >= 2 else set())
        for d in sorted(ds):
            if d % 2 == 0:
                continue
            for k in range(n + 1):
                p = dict(n=n, d=d, k=k)
                rows.append(ReportRow.compare("b=2 coincidence", p, reduce(gaussian_binomial(n, k), d).rep,
                                              reduce(qbnomial(n, k, 2), d).rep))
        for d in divisors(n + 1):
            for k in range(n + 2):
                p = dict(n=n, d=d, k=k)
                direct = as_integer(specialize(e_k(k, n), range(1, n + 1), d))
                rows.append(ReportRow.compare("e_k closed form", p, ek_root_formula(n, k, d), direct))
                if d % 2:
                    rows.append(ReportRow.compare("e_k odd-d sign form", p, ek_root_formula_odd(n, k, d), direct))
    return _result(13, "b=2 coincidence and e_k at roots of unity", rows)


def criterion_13_even_d_note(max_n: int = 9) -> list[ReportRow]:
    """Where the odd-d sign convention differs from direct evaluation (even d only)."""
    rows = []
    for n in range(1, max_n + 1):
        for d in divisors(n + 1):
            if d % 2 == 0:
                for k in range(n + 1):
                    direct = as_integer(specialize(e_k(k, n), range(1, n + 1), d))
                    if ek_root_formula_odd(n, k, d) != direct:
                        rows.append(ReportRow.compare("odd-d sign form at even d", dict(n=n, d=d, k=k),
                                                      ek_root_formula_odd(n, k, d), direct))
    return rows


def run_all(max_n: int = 8, max_b: int = 6) -> list[CriterionResult]:
    """Every criterion; ``max_n`` and ``max_b`` cap the sweeps from above."""
    b5 = tuple(b for b in (2, 3, 4, 5) if b <= max_b)
    return [
        criterion_1(min(max_n, 8), b5),
        criterion_2(),
        criterion_3(min(max_n, 8), min(max_b, 6)),
        criterion_4(min(max_n, 8), min(max_b, 6)),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(max_n=min(max_n, 6), max_b=min(max_b, 6)),
        criterion_10(max_n=min(max_n + 1, 9)),
        criterion_11(),
        criterion_12(),
        criterion_13(min(max_n + 1, 9)),
    ]


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
    11: criterion_11, 12: criterion_12, 13: criterion_13,
}
