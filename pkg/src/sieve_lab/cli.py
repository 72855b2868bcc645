"""``sieve-lab`` command-line front end.

Every subcommand produces a set of named values and a list of report rows.
Exit status is 0 when no row is a FAILURE, 1 otherwise and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import checks, coins
from .cyclotomic import as_integer, reduce
from .multisets import CellStatus, csp_report
from .poly import IntPoly, format_poly
from .qanalogs import UNBOUNDED, bnomial, qbnomial
from .report import ReportRow, Status, dumps, jsonable, render_value
from .rootgf import Case, closed_form, corollary_sums, direct_value
from .symfun import (
    cauchy_expansions,
    h_k_b,
    h_k_b_direct,
    power_expansion_check,
    power_sum_expansion,
    principal_exponents,
    specialize,
    to_schur,
)


class UsageError(Exception):
    pass


def _bound(text: str):
    if text.lower() in ("inf", "infinity", "unbounded"):
        return UNBOUNDED
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("bound must be a positive integer or 'inf'")
    return value


def _partition_label(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _sym_terms(f) -> dict[str, int]:
    return {_partition_label(lam): c for lam, c in sorted(f.terms.items(), reverse=True)}


# -- handlers --------------------------------------------------------------
# each returns (values, rows)


def cmd_csp(args):
    report = csp_report(args.n, args.b)
    rows = []
    for c in report.cells:
        status = {
            CellStatus.VERIFIED: Status.VERIFIED,
            CellStatus.EXPECTED_DIVERGENCE: Status.EXPECTED_DIVERGENCE,
            CellStatus.FAILURE: Status.FAILURE,
        }[c.status]
        rows.append(ReportRow(
            f"csp {c.action.value}",
            dict(n=c.n, b=c.b, d=c.d, k=c.k),
            render_value(c.fixed),
            render_value(c.specialization),
            status,
        ))
    return {}, rows


def cmd_spec(args):
    case = Case(args.case)
    d = args.d
    gf = closed_form(case, args.n, d, args.b)
    label = "twisted generating function" if case is Case.C else "generating function"
    rows = []
    top = max((args.b - 1) * args.n, gf.degree)
    for k in range(top + 1):
        rows.append(ReportRow.compare(f"case {case.value} coefficient", dict(n=args.n, b=args.b, d=d, k=k),
                                      gf[k], direct_value(case, args.n, k, d, args.b)))
    values = {label: gf, "sum at t=1": corollary_sums(args.n, d, args.b, case)}
    return values, rows


def cmd_coin(args):
    b, d = args.b, args.d
    values: dict = {}
    rows: list[ReportRow] = []
    if args.coin_cmd == "sylvester":
        values["S"] = list(coins.sylvester_set(b, d))
        values["[b]_{t^d}/[b]_t"] = coins.sylvester_quotient(b, d)
        rows.append(ReportRow.compare("1+(t-1)S identity", dict(b=b, d=d),
                                      coins.sylvester_quotient(b, d), coins.sylvester_identity(b, d)))
    elif args.coin_cmd == "denumerant":
        pt = coins.locate(b, d, args.n)
        values.update(denumerant=coins.denumerant(b, d, args.n), x=pt.x, y=pt.y)
        rows.append(ReportRow.compare("block = denumerant", dict(b=b, d=d, n=args.n),
                                      values["denumerant"], pt.block))
    elif args.coin_cmd == "decompose":
        cd = coins.congruence_data(b, d)
        pos, neg = coins.rectangle_decomposition(b, d)
        values.update(beta=cd.beta, delta=cd.delta, gamma=cd.gamma, positive=pos, negative=neg)
        rows.append(ReportRow.compare("positive - negative", dict(b=b, d=d),
                                      coins.sylvester_quotient(b, d), pos - neg))
    elif args.coin_cmd == "multisect":
        for r in range(d):
            values[f"f_{r}"] = coins.multisection_f(b, d, r)
        if args.n is not None:
            for r in range(d):
                g, eps = coins.corollary_g(b, d, args.n, r)
                values[f"g_{r}"] = g
                values[f"eps_{r}"] = eps
                rows.append(ReportRow.compare("eps*g nonnegative unimodal", dict(b=b, d=d, n=args.n, r=r), True,
                                              all(c >= 0 for c in eps * g) and coins.is_unimodal((eps * g).coeffs)))
    elif args.coin_cmd == "render":
        width = args.width if args.width is not None else 2 * b
        values["abacus"] = coins.render_abacus(b, d, range(-b, width), range(d + 1))
    return values, rows


def cmd_symfun(args):
    values: dict = {}
    rows: list[ReportRow] = []
    k, b, n = args.k, args.b, args.n
    p = dict(k=k, n=n) if b is UNBOUNDED else dict(k=k, b=b, n=n)
    if args.sym_cmd == "hkb":
        f = h_k_b(k, b, n)
        values["monomial expansion"] = _sym_terms(f)
        rows.append(ReportRow.compare("generating function = bounded partition sum", p,
                                      True, f == h_k_b_direct(k, b, n)))
    elif args.sym_cmd == "schur-expand":
        coeffs = to_schur(h_k_b(k, b, n))
        values["schur expansion"] = {_partition_label(lam): c for lam, c in sorted(coeffs.items(), reverse=True)}
        rows.append(ReportRow.compare("coefficients in {0,1,-1}", p, True,
                                      set(coeffs.values()) <= {-1, 0, 1}))
    elif args.sym_cmd == "power-expand":
        values["monomial expansion"] = _sym_terms(power_sum_expansion(k, b, n))
        rows.append(ReportRow.compare("power-sum identity", p, True, power_expansion_check(k, b, n)))
        if b is not UNBOUNDED:
            values["value at all ones"] = bnomial(n, k, b)
    elif args.sym_cmd == "cauchy-check":
        if b is UNBOUNDED:
            raise UsageError("cauchy-check needs a finite bound")
        target = h_k_b(k, b, n)
        for name, f in cauchy_expansions(k, b, n).items():
            rows.append(ReportRow.compare(f"{name} expansion", p, True, f == target))
    elif args.sym_cmd == "specialize":
        exps = principal_exponents(n, args.case)
        value = specialize(h_k_b(k, b, n), exps, args.d)
        values["value"] = value.rep
        values["integer"] = as_integer(value)
        if b is not UNBOUNDED:
            case = Case(args.case)
            rows.append(ReportRow.compare("agrees with q-analogue", dict(p, d=args.d),
                                          direct_value(case, n, k, args.d, b), as_integer(value)))
    return values, rows


def cmd_qpoly(args):
    poly = qbnomial(args.n, args.k, args.b)
    values: dict = {"q-analogue": poly}
    if args.d is not None:
        e = reduce(poly, args.d)
        values["reduced mod Phi_d"] = e.rep
        values["integer"] = as_integer(e)
    return values, []


def cmd_verify(args):
    if args.criterion is not None:
        results = [checks.CRITERIA[args.criterion]()]
    else:
        results = checks.run_all(args.max_n, args.max_b)
    values = {"summary": [r.summary() for r in results]}
    rows = []
    for r in results:
        rows.extend(r.rows if args.rows else r.failures)
        if not r.rows:
            rows.append(ReportRow.compare(f"criterion {r.number} coverage", {}, "nonempty", "empty"))
    return values, rows


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--max-n", type=int, default=8)
    common.add_argument("--max-b", type=int, default=6)
    common.add_argument("--seed", type=int, default=None, help="reserved; all computation is deterministic")

    parser = argparse.ArgumentParser(prog="sieve-lab", description="Exact cyclic sieving and bounded symmetric function checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("csp", parents=[common], help="cyclic sieving report for X_b^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_csp, var="q")

    p = sub.add_parser("spec", parents=[common], help="closed-form root-of-unity generating function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--case", choices=("a", "b", "c"), required=True)
    p.set_defaults(func=cmd_spec, var="t")

    p = sub.add_parser("coin", help="Sylvester sets and the double abacus")
    coin = p.add_subparsers(dest="coin_cmd", required=True)
    for name in ("sylvester", "denumerant", "decompose", "multisect", "render"):
        c = coin.add_parser(name, parents=[common])
        c.add_argument("--b", type=int, required=True)
        c.add_argument("--d", type=int, required=True)
        if name == "denumerant":
            c.add_argument("--n", type=int, required=True)
        if name == "multisect":
            c.add_argument("--n", type=int, default=None, help="also print g_r for d | n+1")
        if name == "render":
            c.add_argument("--width", type=int, default=None)
        c.set_defaults(func=cmd_coin, var="t")

    p = sub.add_parser("symfun", help="bounded symmetric polynomials")
    sym = p.add_subparsers(dest="sym_cmd", required=True)
    for name in ("hkb", "schur-expand", "power-expand", "cauchy-check", "specialize"):
        c = sym.add_parser(name, parents=[common])
        c.add_argument("--k", type=int, required=True)
        c.add_argument("--b", type=_bound, required=True)
        c.add_argument("--n", type=int, required=True)
        if name == "specialize":
            c.add_argument("--d", type=int, required=True)
            c.add_argument("--case", choices=("a", "b", "c"), default="a")
        c.set_defaults(func=cmd_symfun, var="w")

    p = sub.add_parser("qpoly", parents=[common], help="the q-analogue of a b-nomial coefficient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(func=cmd_qpoly, var="q")

    p = sub.add_parser("verify", parents=[common], help="run the acceptance sweeps")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true")
    group.add_argument("--criterion", type=int, choices=sorted(checks.CRITERIA))
    p.add_argument("--rows", action="store_true", help="list every row, not only failures")
    p.set_defaults(func=cmd_verify, var="t")
    return parser


# -- output ---------------------------------------------------------------


def _render_text(values: dict, rows: list[ReportRow], var: str, style: str) -> str:
    lines = []
    for key, v in values.items():
        if isinstance(v, IntPoly):
            lines.append(f"{key}: {format_poly(v, var, style)}")
        elif isinstance(v, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k2}: {render_value(x)}" for k2, x in v.items())
        elif isinstance(v, list) and v and all(isinstance(x, str) for x in v):
            lines.extend(v)
        elif isinstance(v, str) and "\n" in v:
            lines.append(v)
        elif isinstance(v, list):
            lines.append(f"{key}: {{{', '.join(map(str, v))}}}")
        elif isinstance(v, tuple):
            lines.append(f"{key}: ({', '.join(map(str, v))})")
        else:
            lines.append(f"{key}: {render_value(v)}")
    lines.extend(r.to_text() for r in rows)
    return "\n".join(lines)


def render(command: str, values: dict, rows: list[ReportRow], fmt: str, var: str) -> str:
    if fmt == "json":
        payload = {
            "command": command,
            "values": jsonable(values),
            "rows": [r.to_json() for r in rows],
            "ok": not any(r.status is Status.FAILURE for r in rows),
        }
        return dumps(payload)
    return _render_text(values, rows, var, "latex" if fmt == "latex" else "text")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = " ".join(x for x in (args.command, getattr(args, "coin_cmd", None),
                                   getattr(args, "sym_cmd", None)) if x)
    try:
        values, rows = args.func(args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"sieve-lab: error: {exc}", file=sys.stderr)
        return 2
    print(render(command, values, rows, args.format, args.var))
    failures = [r for r in rows if r.status is Status.FAILURE]
    if failures:
        print(f"{len(failures)} FAILURE row(s)", file=sys.stderr)
        for r in failures:
            print(r.to_text(), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
