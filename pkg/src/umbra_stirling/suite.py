"""The acceptance check-set, runnable as one aggregate report."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations, product

from . import __version__
from .dobinski import (
    check_bell_specialization,
    check_bell_umbral,
    check_dobinski_rearrangement,
    check_epsilon_literal,
    check_exp_pol_II,
    check_q_bell_recurrences,
    dobinski_numeric,
    gordian_S_psi,
    prefab_bell,
    psi_poisson_moment_check,
)
from .exact import Poly
from .newton import check_abel_goncharov, check_s_rs_reduction, ns_dobinski_numeric
from .normal_order import check_q_normal_order, check_non_q_normal_order, normal_order_solve
from .partitions import (
    check_cigl,
    check_inv_recurrence,
    check_statistic_specialization,
    family_match_report,
    rgs,
)
from .reports import CheckReport, combine, compare_cases
from .sequences import CLASSICAL, FIBONOMIAL, Q_SYMBOLIC, hyper_l, q_gauss
from .stirling import (
    check_basis_change,
    check_convolution_recurrences,
    check_explicit_sum,
    check_milne,
    check_orthogonality,
    check_rescal,
    check_routes,
    check_specialization,
)

FOUR = (CLASSICAL, Q_SYMBOLIC, hyper_l(2), FIBONOMIAL)
HALF = Fraction(1, 2)


def thread_cap() -> int:
    raw = os.environ.get("UMBRA_STIRLING_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return min(4, os.cpu_count() or 1)


# --- independent oracles ------------------------------------------------------


def partition_count(n: int) -> int:
    return sum(1 for _ in rgs(n))


def _subspaces(p: int, n: int):
    """All subspaces of F_p^n as frozensets of vectors."""
    vectors = list(product(range(p), repeat=n))
    found = set()
    for size in range(n + 1):
        for basis in combinations(vectors, size):
            span = set()
            for coeffs in product(range(p), repeat=size):
                span.add(tuple(sum(c * v[i] for c, v in zip(coeffs, basis)) % p for i in range(n)))
            found.add(frozenset(span))
    return found


def direct_sum_decompositions(p: int, n: int) -> int:
    """Unordered sets of nonzero subspaces of F_p^n whose direct sum is the space."""
    spaces = sorted((s for s in _subspaces(p, n) if len(s) > 1), key=lambda s: (len(s), sorted(s)))

    def dim(s):
        d, m = 0, len(s)
        while m > 1:
            m //= p
            d += 1
        return d

    def count(start, span, used_dim):
        if used_dim == n:
            return 1
        total = 0
        for i in range(start, len(spaces)):
            s = spaces[i]
            if used_dim + dim(s) > n:
                continue
            new = {tuple((a + b) % p for a, b in zip(u, v)) for u in span for v in s}
            if len(new) == len(span) * len(s):
                total += count(i + 1, new, used_dim + dim(s))
        return total

    return count(0, {tuple([0] * n)}, 0)


# --- composite checks -------------------------------------------------------------


def _per_seq(id, anchor, fn, seqs, n):
    return combine(id, anchor, {"n_max": n}, [fn(s, n) for s in seqs])


def check_classical_dobinski(n_max: int, terms: int = 60, tol="1e-9") -> CheckReport:
    parts = [dobinski_numeric("classical", n, terms, tol, oracle=partition_count(n)) for n in range(1, n_max + 1)]
    return combine(
        "dobinski-classical-numeric",
        "e^(-1) sum k^n/k! = number of set partitions of [n]",
        {"n_max": n_max, "terms": terms, "tol": str(tol)},
        parts,
    )


def check_q_dobinski(n_max: int, milne_max: int, q=HALF, terms: int = 80, tol="1e-9") -> CheckReport:
    parts = [dobinski_numeric("carlitzQ", n, terms, tol, q=q) for n in range(n_max + 1)]
    parts += [dobinski_numeric("milne", n, terms, tol, q=q) for n in range(milne_max + 1)]
    return combine("dobinski-q-numeric", "q-Dobinski and Milne series at numeric q", {"q": q}, parts)


def check_normal_order(n_max: int) -> CheckReport:
    fib2 = normal_order_solve(FIBONOMIAL, 2, 5)
    witness = compare_cases(
        "normal-order/fib-n2",
        "Fibonomial n = 2 breaks at N = 3",
        {},
        [({"n": 2}, fib2.witness, {"N": 3, "lhs": 4, "rhs": 2})],
    )
    outcomes = {n: normal_order_solve(FIBONOMIAL, n) for n in range(2, n_max + 1)}
    bounded = compare_cases(
        "normal-order/witness-bound",
        "Fibonomial witness N <= 2n + 3",
        {},
        (({"n": n}, None if o.consistent else o.witness["N"], 2 * n + 3) for n, o in outcomes.items()),
        equal=lambda N, bound: N is not None and N <= bound,
    )
    parts = [check_q_normal_order(n_max), check_non_q_normal_order([FIBONOMIAL, hyper_l(2)], n_max), witness, bounded]
    return combine("normal-order", "normal ordering of (x d_psi)^n", {"n_max": n_max}, parts)


def check_ns_dob(xs=(HALF, 1, 2), terms: int = 60, tol="1e-9") -> CheckReport:
    b = Poly.monomial(3, "x")
    parts = [ns_dobinski_numeric(b, x, terms, tol) for x in xs]
    return combine("ns-dob", "Newton-Stirling Dobinski at several x", {"b": "x^3"}, parts)


def check_prefab(q: int = 2, n: int = 2) -> CheckReport:
    value = prefab_bell(q, n).values[n]
    return compare_cases(
        "prefab",
        "D_n = n_gamma! [x^n] exp(exp_gamma(x) - 1) counts direct-sum decompositions",
        {"q": q, "n": n},
        [({"n": n}, value, direct_sum_decompositions(q, n))],
    )


def check_poisson(n_max: int) -> CheckReport:
    parts = [psi_poisson_moment_check(s, n_max) for s in (CLASSICAL, q_gauss(HALF), FIBONOMIAL)]
    return combine("poisson-moments", "falling psi-moments of the psi-Poisson functional", {"n_max": n_max}, parts)


def check_errata(n: int) -> CheckReport:
    parts = [
        check_convolution_recurrences(n),
        check_explicit_sum(Q_SYMBOLIC, n),
        check_epsilon_literal(Q_SYMBOLIC, n),
        check_cigl(n),
        check_exp_pol_II(CLASSICAL, 3, 2),
        check_q_bell_recurrences(n),
        check_bell_umbral(Q_SYMBOLIC, n),
        gordian_S_psi(FIBONOMIAL, 3)[1],
    ]
    for p in parts:
        p.informational = True
    return combine("erratum-detectors", "literal evaluation of printed identities", {"n": n}, parts, informational=True)


def check_set(quick: bool = False) -> list:
    """(id, criterion, thunk) triples; ``quick`` shrinks the ranges."""
    s = 6 if quick else 10
    m = 5 if quick else 8
    return [
        ("routes", 1, lambda: _per_seq("routes-all", "four routes to {n,k}~", check_routes, FOUR, s)),
        ("basis-change", 2, lambda: _per_seq("basis-change-all", "sum_k {n,k}~ psi_k(x) = x^n", check_basis_change, FOUR, s)),
        ("rescal", 3, lambda: check_rescal(8 if quick else 12)),
        ("orthogonality", 4, lambda: _per_seq("orthogonality-all", "first kind times second kind", check_orthogonality, FOUR, s)),
        ("milne", 5, lambda: check_milne(m)),
        (
            "dobinski-rearrangement",
            6,
            lambda: combine(
                "dobinski-rearrangement-all",
                "exact Dobinski rearrangement",
                {"n_max": m},
                [check_dobinski_rearrangement(seq, n) for seq in FOUR[:3] for n in range(m + 1)],
            ),
        ),
        ("dobinski-classical-numeric", 6, lambda: check_classical_dobinski(m)),
        ("dobinski-q-numeric", 7, lambda: check_q_dobinski(m, 4 if quick else 6)),
        ("normal-order", 8, lambda: check_normal_order(4 if quick else 6)),
        ("inv-recurrence", 9, lambda: check_inv_recurrence(m + 1)),
        ("cigl", 9, lambda: check_cigl(m)),
        ("statistic-specialization", 9, lambda: check_statistic_specialization(8 if quick else 10)),
        ("family-match", 9, lambda: family_match_report(m)),
        ("abel-goncharov", 10, lambda: check_abel_goncharov(m)),
        ("s-rs-reduction", 10, lambda: check_s_rs_reduction(6)),
        ("ns-dob", 10, lambda: check_ns_dob()),
        ("prefab", 11, lambda: check_prefab()),
        ("poisson-moments", 12, lambda: check_poisson(6)),
        ("erratum-detectors", 13, lambda: check_errata(5)),
        ("specialization-tables", 14, lambda: check_specialization(s)),
        ("specialization-bell", 14, lambda: check_bell_specialization(s)),
    ]


def run_suite(quick: bool = False, only=None) -> dict:
    checks = [c for c in check_set(quick) if only is None or c[0] in only]
    with ThreadPoolExecutor(max_workers=thread_cap()) as pool:
        futures = [(cid, crit, pool.submit(fn)) for cid, crit, fn in checks]
        results = [(cid, crit, f.result()) for cid, crit, f in futures]
    results.sort(key=lambda r: r[0])
    reports = []
    for cid, crit, rep in results:
        out = rep.to_json()
        out["id"] = cid
        out["criterion"] = crit
        reports.append(out)
    failed = [r["id"] for r in reports if r["status"] == "fails" and not r["informational"]]
    return {
        "metadata": {"package": "umbra-stirling", "version": __version__, "quick": quick},
        "reports": reports,
        "summary": {
            "total": len(reports),
            "failed": failed,
            "informational_failures": [r["id"] for r in reports if r["status"] == "fails" and r["informational"]],
            "ok": not failed,
        },
    }
