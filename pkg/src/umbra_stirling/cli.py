"""Command-line front end.

Exit codes: 0 when every asserted identity holds, 1 for a computational
error (an error JSON object is printed) or an asserted identity that
fails, 2 for a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import dobinski, newton, normal_order, partitions, stirling
from .errors import UmbraError
from .exact import parse_polynomial, to_json
from .reports import CheckReport, jsonable
from .sequences import CLASSICAL, Kind, parse_sequence
from .suite import run_suite


def _seq(text):
    try:
        return parse_sequence(text)
    except (ValueError, KeyError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _poly(text):
    try:
        return parse_polynomial(text, "x")
    except (ValueError, SyntaxError) as exc:
        raise argparse.ArgumentTypeError(f"bad polynomial {text!r}: {exc}") from exc


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2)


# --- subcommands ------------------------------------------------------------------


def _table(args):
    fam = stirling.Family(args.family)
    seq = args.seq
    if fam is stirling.Family.NWC_SECOND:
        table = stirling.nwc_second_table(seq, args.nmax)
    elif fam is stirling.Family.CARLITZ_SECOND:
        if seq.kind is not Kind.QGAUSS:
            raise ValueError("carlitz2 needs --seq q or q=<value>")
        table = stirling.carlitz_q_table(args.nmax, seq.q)
    elif fam is stirling.Family.NWC_FIRST:
        table = stirling.first_kind_nwc_table(seq, args.nmax)
    else:
        table = stirling.first_kind_c_table(seq, args.nmax)
    if args.format == "json":
        return table.to_json(), True
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n"] + [f"k={k}" for k in range(table.n_max + 1)])
    for n, row in enumerate(table.rows):
        w.writerow([n] + [str(c) for c in row])
    return buf.getvalue(), True


def _bell(args):
    fam = dobinski.BellFamily(args.family)
    seq = args.seq
    q = args.q
    if fam is dobinski.BellFamily.CARLITZ_Q and q is None and seq.kind is Kind.QGAUSS:
        q = seq.q
    if fam is dobinski.BellFamily.PREFAB and q is None:
        q = seq.q if seq.kind is Kind.GAMMA_GL else None
    return dobinski.bell_sequence(fam, seq, args.nmax, q).to_json(), True


def _dobinski(args):
    rep = dobinski.dobinski_numeric(args.variant, args.n, args.terms, args.tol, seq=args.seq, q=args.q)
    return rep.to_json(), not rep.failed_assertion


def _partitions(args):
    if args.k is None:
        polys = {k: partitions.statistic_stirling(args.n, k, args.stat) for k in range(args.n + 1)}
    else:
        polys = {args.k: partitions.statistic_stirling(args.n, args.k, args.stat)}
    out = {
        "n": args.n,
        "stat": args.stat,
        "polynomials": {str(k): [int(c) for c in p.coeffs] for k, p in polys.items()},
        "bell": [int(c) for c in partitions.statistic_bell(args.n, args.stat).coeffs],
    }
    if args.list:
        ground = "one" if args.stat == "inv" else "zero"
        stat = partitions.inv_statistic if args.stat == "inv" else partitions.cigl_statistic
        out["partitions"] = [
            {"blocks": [list(b) for b in p.blocks], "value": stat(p)}
            for p in partitions.enumerate_partitions(args.n, args.k, ground)
        ]
    return out, True


def _normal_order(args):
    out = normal_order.normal_order_solve(args.seq, args.n, args.nmax_probe)
    return out.to_json(), True


def _newton(args):
    b = args.b
    if args.k is None:
        row = newton.newton_stirling_row(b)
        return {"b": str(b), "row": [to_json(v) for v in row], "sum": to_json(sum(row, Fraction(0)))}, True
    return {"b": str(b), "k": args.k, "value": to_json(newton.newton_stirling(b, args.k))}, True


def _check_registry(args):
    seq, n = args.seq, args.nmax
    return {
        "routes": lambda: stirling.check_routes(seq, n),
        "basis-change": lambda: stirling.check_basis_change(seq, n),
        "explicit-sum": lambda: stirling.check_explicit_sum(seq, n),
        "orthogonality": lambda: stirling.check_orthogonality(seq, n),
        "rescal": lambda: stirling.check_rescal(n),
        "milne": lambda: stirling.check_milne(n),
        "carlitz-defining": lambda: stirling.check_carlitz_defining(n),
        "q-exp-pol": lambda: stirling.check_q_exp_pol(n),
        "conv-recurrences": lambda: stirling.check_convolution_recurrences(n),
        "specialization": lambda: stirling.check_specialization(n),
        "inv-recurrence": lambda: partitions.check_inv_recurrence(n),
        "cigl": lambda: partitions.check_cigl(n),
        "family-match": lambda: partitions.family_match_report(n),
        "statistic-specialization": lambda: partitions.check_statistic_specialization(n),
        "abel-goncharov": lambda: newton.check_abel_goncharov(n),
        "s-rs-reduction": lambda: newton.check_s_rs_reduction(n),
        "ns-dob": lambda: newton.ns_dobinski_numeric(args.b, args.x, args.terms, args.tol),
        "dobinski-rearrangement": lambda: dobinski.check_dobinski_rearrangement(seq, n, args.K),
        "epsilon-literal": lambda: dobinski.check_epsilon_literal(seq, n),
        "exp-pol-II": lambda: dobinski.check_exp_pol_II(seq, n, args.x, args.K),
        "egf-rearrangement": lambda: dobinski.check_egf_rearrangement(seq, n, args.K),
        "q-bell-recurrences": lambda: dobinski.check_q_bell_recurrences(n),
        "bell-umbral": lambda: dobinski.check_bell_umbral(seq, n),
        "bell-specialization": lambda: dobinski.check_bell_specialization(n),
        "poisson-moments": lambda: dobinski.psi_poisson_moment_check(seq, n, args.terms, args.tol),
        "gordian": lambda: dobinski.gordian_S_psi(seq, n)[1],
        "ghw-exp-poly": lambda: dobinski.ghw_exp_poly_series(seq, n),
        "normal-order-q": lambda: normal_order.check_q_normal_order(n),
        "normal-order-non-q": lambda: normal_order.check_non_q_normal_order([seq], n),
    }


# alternative names accepted by ``check --id``
ALIASES = {"explicit14": "explicit-sum"}
CHECK_IDS = sorted([*_check_registry(argparse.Namespace(seq=None, nmax=0)), *ALIASES])


def _check(args):
    rep: CheckReport = _check_registry(args)[ALIASES.get(args.id, args.id)]()
    return rep.to_json(), not rep.failed_assertion


def _suite(args):
    report = run_suite(quick=args.quick)
    return report, report["summary"]["ok"]


# --- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="umbra-stirling", description="Exact psi-extended Stirling and Bell numbers.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="triangular Stirling tables")
    t.add_argument("--family", choices=[f.value for f in stirling.Family], default="nwc2")
    t.add_argument("--seq", type=_seq, default=CLASSICAL)
    t.add_argument("--nmax", type=int, default=6)
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.set_defaults(run=_table)

    b = sub.add_parser("bell", help="Bell-number sequences")
    b.add_argument("--family", choices=[f.value for f in dobinski.BellFamily], default="nwc")
    b.add_argument("--seq", type=_seq, default=CLASSICAL)
    b.add_argument("--q", type=_fraction)
    b.add_argument("--nmax", type=int, default=6)
    b.set_defaults(run=_bell)

    d = sub.add_parser("dobinski", help="Dobinski-type series as exact partial sums")
    d.add_argument("--variant", choices=("classical", "q", "carlitzQ", "milne", "psi", "cigl"), default="classical")
    d.add_argument("--seq", type=_seq)
    d.add_argument("--q", type=_fraction)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--terms", type=int, default=80)
    d.add_argument("--tol", default="1e-9")
    d.set_defaults(run=_dobinski)

    pa = sub.add_parser("partitions", help="inv and cigl statistic polynomials")
    pa.add_argument("--n", type=int, required=True)
    pa.add_argument("--k", type=int)
    pa.add_argument("--stat", choices=partitions.STATS, default="inv")
    pa.add_argument("--list", action="store_true", help="also list every partition")
    pa.add_argument("--format", choices=("json",), default="json")
    pa.set_defaults(run=_partitions)

    no = sub.add_parser("normal-order", help="solve the normal-ordering system")
    no.add_argument("--seq", type=_seq, default=CLASSICAL)
    no.add_argument("--n", type=int, required=True)
    no.add_argument("--nmax-probe", type=int)
    no.add_argument("--format", choices=("json",), default="json")
    no.set_defaults(run=_normal_order)

    ns = sub.add_parser("newton-stirling", help="[0, 1, ..., k; b]")
    ns.add_argument("--b", type=_poly, required=True)
    ns.add_argument("--k", type=int)
    ns.set_defaults(run=_newton)

    c = sub.add_parser("check", help="run one identity check")
    c.add_argument("--id", choices=CHECK_IDS, required=True)
    c.add_argument("--seq", type=_seq, default=CLASSICAL)
    c.add_argument("--nmax", type=int, default=6)
    c.add_argument("--K", type=int)
    c.add_argument("--b", type=_poly, default=parse_polynomial("x^3", "x"))
    c.add_argument("--x", type=_fraction, default=Fraction(1))
    c.add_argument("--terms", type=int, default=60)
    c.add_argument("--tol", default="1e-9")
    c.set_defaults(run=_check)

    s = sub.add_parser("suite", help="run the acceptance check-set")
    s.add_argument("--quick", action="store_true")
    s.set_defaults(run=_suite)
    return p


def run_command(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, ok = args.run(args)
    except (UmbraError, ValueError, ArithmeticError, IndexError, TypeError) as exc:
        out.write(dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    out.write(payload if isinstance(payload, str) else dumps(payload) + "\n")
    return 0 if ok else 1


def main() -> None:
    sys.exit(run_command())
