"""Psi-extended Stirling numbers of both kinds.

The tilde family {n,k}~ is defined by the recurrence
{n+1,k}~ = {n,k-1}~ + k_psi {n,k}~ and works for every sequence; the
generating-function, monomial-sum and divided-difference formulas are
independent routes used as cross-checks.  The Carlitz family carries the
extra q^(k-1) weight and lives over symbolic q.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .errors import ConsistencyError, IndexOutOfRange, RepeatedNodes, ZeroFactorial
from .exact import (
    Poly,
    TruncatedSeries,
    evaluate_scalar,
    newton_top_row,
    q_symbol,
    series_inverse,
    to_json,
)
from .reports import CheckReport, combine, compare_cases
from .sequences import (
    CLASSICAL,
    Q_SYMBOLIC,
    Kind,
    PsiSequence,
    evaluate_sequence,
    falling_node_poly,
    psi_binomial,
    psi_derivative,
    psi_factorial,
    psi_value,
    rising_node_poly,
    sequence_spec,
)


class Family(str, Enum):
    NWC_SECOND = "nwc2"
    CARLITZ_SECOND = "carlitz2"
    NWC_FIRST = "nwc1"
    C_FIRST = "c1"


@dataclass(frozen=True)
class StirlingTable:
    """Triangular array; ``rows[n][k]`` for 0 <= k <= n, zero beyond."""

    family: Family
    seq: PsiSequence
    rows: tuple

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int):
        if n < 0 or k < 0 or n > self.n_max:
            raise IndexOutOfRange(f"({n},{k}) outside table of size {self.n_max}")
        if k > n:
            return self.seq.zero
        return self.rows[n][k]

    def row(self, n: int) -> tuple:
        return self.rows[n]

    def row_sum(self, n: int):
        return sum(self.rows[n][1:], self.rows[n][0])

    def evaluate(self, q) -> "StirlingTable":
        """Substitute a numeric q into every entry."""
        rows = tuple(tuple(evaluate_scalar(c, q) for c in r) for r in self.rows)
        return StirlingTable(self.family, evaluate_sequence(self.seq, q), rows)

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "seq": sequence_spec(self.seq),
            "n_max": self.n_max,
            "rows": [[to_json(c) for c in r] for r in self.rows],
        }


# --- second kind, tilde family -------------------------------------------------


@lru_cache(maxsize=128)
def _nwc_rows(seq: PsiSequence, n_max: int) -> tuple:
    zero, one = seq.zero, seq.one
    rows = [(one,)]
    for n in range(n_max):
        prev = rows[-1]
        new = [zero]
        for k in range(1, n + 2):
            below = prev[k - 1]
            same = prev[k] * psi_value(seq, k) if k <= n else zero
            new.append(below + same)
        rows.append(tuple(new))
    return tuple(rows)


def nwc_second_table(seq: PsiSequence, n_max: int) -> StirlingTable:
    if n_max < 0:
        raise IndexOutOfRange("n_max must be non-negative")
    return StirlingTable(Family.NWC_SECOND, seq, _nwc_rows(seq, n_max))


def nwc_second(seq: PsiSequence, n: int, k: int):
    if k > n:
        return seq.zero
    return _nwc_rows(seq, n)[n][k]


def nwc_second_via_ogf(seq: PsiSequence, n: int, k: int):
    """[x^n] of x^k / ((1 - 1_psi x)...(1 - k_psi x))."""
    if k > n:
        return seq.zero
    order = n
    denom = TruncatedSeries([seq.one], order)
    for i in range(1, k + 1):
        denom = denom * TruncatedSeries([seq.one, -psi_value(seq, i)], order)
    return series_inverse(denom)[n - k]


def _weak_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def nwc_second_monomial_sum(seq: PsiSequence, n: int, k: int):
    """Sum over weakly increasing index tuples, checked against the
    weak-composition form of the same sum."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"need 0 <= k <= n, got ({n},{k})")
    vals = [psi_value(seq, i) for i in range(k + 1)]
    total = seq.zero
    for idx in combinations_with_replacement(range(1, k + 1), n - k):
        term = seq.one
        for i in idx:
            term = term * vals[i]
        total = total + term
    alt = seq.zero
    for d in _weak_compositions(n - k, k):
        term = seq.one
        for i, e in enumerate(d, start=1):
            if e:
                term = term * vals[i] ** e
        alt = alt + term
    if total != alt:
        raise ConsistencyError(f"monomial and composition sums differ at ({n},{k})")
    return total


@lru_cache(maxsize=256)
def _dd_row(seq: PsiSequence, n: int) -> tuple:
    nodes = [psi_value(seq, j) for j in range(n + 1)]
    return tuple(newton_top_row(nodes, Poly.monomial(n, "x", seq.one)))


def nwc_second_divided_diff(seq: PsiSequence, n: int, k: int):
    """[0, 1_psi, ..., k_psi; x^n]."""
    if not seq.flags.distinct_nodes:
        raise RepeatedNodes(f"{sequence_spec(seq)} repeats a node")
    if k > n:
        return seq.zero
    return _dd_row(seq, n)[k]


def check_routes(seq: PsiSequence, n_max: int) -> CheckReport:
    """All available routes to {n,k}~ agree with the recurrence."""
    table = nwc_second_table(seq, n_max)
    routes = {
        "ogf": nwc_second_via_ogf,
        "monomial-sum": nwc_second_monomial_sum,
    }
    if seq.flags.distinct_nodes:
        routes["divided-difference"] = nwc_second_divided_diff
    parts = []
    for name, fn in routes.items():
        cases = (
            ({"n": n, "k": k}, table.entry(n, k), fn(seq, n, k))
            for n in range(n_max + 1)
            for k in range(n + 1)
        )
        parts.append(compare_cases(f"routes/{name}", "{n,k}~ by " + name, {}, cases))
    params = {"seq": sequence_spec(seq), "n_max": n_max, "routes": ["recurrence", *routes]}
    return combine("routes", "{n,k}~ recurrence = ogf = monomial sum = divided difference", params, parts)


def check_basis_change(seq: PsiSequence, n_max: int) -> CheckReport:
    """x^n = sum_k {n,k}~ x(x - 1_psi)...(x - (k-1)_psi) as polynomials."""
    table = nwc_second_table(seq, n_max)

    def cases():
        for n in range(n_max + 1):
            rhs = Poly((), "x")
            for k in range(n + 1):
                rhs = rhs + falling_node_poly(seq, k) * table.entry(n, k)
            yield {"n": n}, Poly.monomial(n, "x", seq.one), rhs

    params = {"seq": sequence_spec(seq), "n_max": n_max}
    return compare_cases("basis-change", "x^n = sum_k {n,k}~ psi_k(x)", params, cases())


def check_explicit_sum(seq: PsiSequence, n_max: int) -> CheckReport:
    """Alternating psi-binomial sum against the recurrence table.

    The sum starts at r = 0 so that the (0,0) entry is covered by the
    convention 0_psi^0 = 1; for n >= 1 the r = 0 term vanishes.
    Beyond the classical sequence this is informational.
    """
    params = {"seq": sequence_spec(seq), "n_max": n_max}
    anchor = "{n,k}~ = (1/k_psi!) sum_r (-1)^(k-r) binom_psi(k,r) r_psi^n"
    if not seq.flags.invertible_factorials:
        raise ZeroFactorial(f"{sequence_spec(seq)} has a vanishing factorial")
    table = nwc_second_table(seq, n_max)

    def rhs(n, k):
        s = seq.zero
        for r in range(k + 1):
            term = psi_binomial(seq, k, r) * psi_value(seq, r) ** n
            s = s + term if (k - r) % 2 == 0 else s - term
        return s / psi_factorial(seq, k)

    cases = (
        ({"n": n, "k": k}, table.entry(n, k), rhs(n, k))
        for n in range(n_max + 1)
        for k in range(n + 1)
    )
    return compare_cases("explicit-sum", anchor, params, cases, informational=seq.kind is not Kind.CLASSICAL)


# --- Carlitz family ----------------------------------------------------------


@lru_cache(maxsize=32)
def _carlitz_rows(n_max: int) -> tuple:
    seq = Q_SYMBOLIC
    q = q_symbol()
    zero, one = seq.zero, seq.one
    rows = [(one,)]
    for n in range(n_max):
        prev = rows[-1]
        new = [zero]
        for k in range(1, n + 2):
            below = prev[k - 1] * q ** (k - 1)
            same = prev[k] * psi_value(seq, k) if k <= n else zero
            new.append(below + same)
        rows.append(tuple(new))
    return tuple(rows)


def carlitz_q_table(n_max: int, q=None) -> StirlingTable:
    """{n+1,k}_q = q^(k-1) {n,k-1}_q + k_q {n,k}_q; numeric q by substitution."""
    table = StirlingTable(Family.CARLITZ_SECOND, Q_SYMBOLIC, _carlitz_rows(n_max))
    return table if q is None else table.evaluate(q)


def carlitz_q(n: int, k: int):
    if k > n:
        return Q_SYMBOLIC.zero
    return _carlitz_rows(n)[n][k]


def check_carlitz_defining(n_max: int) -> CheckReport:
    """N_q^n = sum_k {n,k}_q N_q (N-1)_q ... (N-k+1)_q for N <= n_max + 2."""
    seq = Q_SYMBOLIC
    table = carlitz_q_table(n_max)

    def falling(N, k):
        out = seq.one
        for j in range(k):
            out = out * psi_value(seq, N - j) if N - j >= 0 else seq.zero
        return out

    def cases():
        for n in range(n_max + 1):
            for N in range(n_max + 3):
                rhs = seq.zero
                for k in range(n + 1):
                    rhs = rhs + table.entry(n, k) * falling(N, k)
                yield {"n": n, "N": N}, psi_value(seq, N) ** n, rhs

    return compare_cases(
        "carlitz-defining", "x_q^n = sum_k {n,k}_q x_q^(falling k)", {"n_max": n_max}, cases()
    )


def check_rescal(n_max: int) -> CheckReport:
    """{n,k}~_q = q^(-C(k,2)) {n,k}_q."""
    q = q_symbol()
    tilde = nwc_second_table(Q_SYMBOLIC, n_max)
    carl = carlitz_q_table(n_max)
    cases = (
        ({"n": n, "k": k}, tilde.entry(n, k), q ** (-comb(k, 2)) * carl.entry(n, k))
        for n in range(n_max + 1)
        for k in range(n + 1)
    )
    return compare_cases("rescal", "{n,k}~_q = q^(-C(k,2)) {n,k}_q", {"n_max": n_max}, cases)


def gaussian_binomial(n: int, k: int):
    return psi_binomial(Q_SYMBOLIC, n, k)


def milne_delta_q(n: int, k: int):
    """(E - q^(k-1))...(E - q^0) applied to x_q^n at x = 0, by subset expansion."""
    q = q_symbol()
    seq = Q_SYMBOLIC
    out = seq.zero
    for m in range(k + 1):
        term = q ** comb(k - m, 2) * gaussian_binomial(k, k - m) * psi_value(seq, m) ** n
        out = out + term if (k - m) % 2 == 0 else out - term
    return out


def check_milne(n_max: int) -> CheckReport:
    cases = (
        ({"n": n, "k": k}, milne_delta_q(n, k), psi_factorial(Q_SYMBOLIC, k) * carlitz_q(n, k))
        for n in range(n_max + 1)
        for k in range(n + 1)
    )
    return compare_cases("milne", "Delta_q^k x_q^n |_0 = k_q! {n,k}_q", {"n_max": n_max}, cases)


# --- exponential polynomials ---------------------------------------------------


def exp_poly_nwc(seq: PsiSequence, n: int) -> tuple[Poly, CheckReport]:
    """sum_k {n,k}~ y^k, with a check of phi_m = y (1 + d_psi) phi_(m-1) for m <= n."""
    table = nwc_second_table(seq, n)
    polys = [Poly(table.row(m), "y") for m in range(n + 1)]
    y = Poly((seq.zero, seq.one), "y")
    cases = (
        ({"n": m}, polys[m], y * (polys[m - 1] + psi_derivative(polys[m - 1], seq)))
        for m in range(1, n + 1)
    )
    report = compare_cases(
        "exp-poly-recurrence",
        "phi~_n = [y(1 + d_psi)] phi~_(n-1)",
        {"seq": sequence_spec(seq), "n": n},
        cases,
    )
    return polys[n], report


def exp_poly_carlitz(n: int) -> Poly:
    return Poly(carlitz_q_table(n).row(n), "x")


def check_q_exp_pol(n_max: int) -> CheckReport:
    """Coefficients q^C(k,2) [0, 1_q, ..., k_q; e_n] against the Carlitz rows."""
    q = q_symbol()
    cases = (
        ({"n": n, "k": k}, q ** comb(k, 2) * nwc_second_divided_diff(Q_SYMBOLIC, n, k), carlitz_q(n, k))
        for n in range(n_max + 1)
        for k in range(n + 1)
    )
    return compare_cases("q-exp-pol", "q^C(k,2) [0..k_q; e_n] = {n,k}_q", {"n_max": n_max}, cases)


# --- first kind ------------------------------------------------------------------


def _coefficient_rows(seq, k_max, node_poly) -> tuple:
    rows = []
    for k in range(k_max + 1):
        c = list(node_poly(seq, k).coeffs)
        c += [seq.zero] * (k + 1 - len(c))
        rows.append(tuple(c))
    return tuple(rows)


def first_kind_nwc_table(seq: PsiSequence, k_max: int) -> StirlingTable:
    """Coefficients of x(x - 1_psi)...(x - (k-1)_psi)."""
    return StirlingTable(Family.NWC_FIRST, seq, _coefficient_rows(seq, k_max, falling_node_poly))


def first_kind_c_table(seq: PsiSequence, k_max: int) -> StirlingTable:
    """Coefficients of x(x + 1_psi)...(x + (k-1)_psi)."""
    return StirlingTable(Family.C_FIRST, seq, _coefficient_rows(seq, k_max, rising_node_poly))


def check_orthogonality(seq: PsiSequence, k_max: int) -> CheckReport:
    first = first_kind_nwc_table(seq, k_max)
    second = nwc_second_table(seq, k_max)

    def cases():
        for k in range(k_max + 1):
            for l in range(k_max + 1):
                s = seq.zero
                for r in range(l, k + 1):
                    s = s + first.entry(k, r) * second.entry(r, l)
                yield {"k": k, "l": l}, s, seq.one if k == l else seq.zero

    params = {"seq": sequence_spec(seq), "k_max": k_max}
    return compare_cases("orthogonality", "sum_r [k,r]~ {r,l}~ = delta_kl", params, cases())


def check_convolution_recurrences(n_max: int) -> CheckReport:
    """Literal evaluation of the two printed q-binomial convolution
    recurrences (informational)."""
    q = q_symbol()
    carl = carlitz_q_table(n_max)
    tilde = nwc_second_table(Q_SYMBOLIC, n_max)

    def first():
        for n in range(n_max):
            for k in range(1, n + 2):
                rhs = sum(
                    (gaussian_binomial(n, l) * q ** l * carl.entry(l, k - 1) for l in range(n + 1)),
                    Q_SYMBOLIC.zero,
                )
                yield {"n": n, "k": k}, carl.entry(n + 1, k), rhs

    def second():
        for n in range(n_max):
            for k in range(1, n + 2):
                rhs = sum(
                    (gaussian_binomial(n, l) * q ** (l - k + 1) * tilde.entry(l, k - 1) for l in range(n + 1)),
                    Q_SYMBOLIC.zero,
                )
                yield {"n": n, "k": k}, tilde.entry(n + 1, k), rhs

    parts = [
        compare_cases(
            "conv-recurrences/carlitz",
            "{n+1,k}_q = sum_l binom_q(n,l) q^l {l,k-1}_q",
            {},
            first(),
            informational=True,
            keep=200,
        ),
        compare_cases(
            "conv-recurrences/tilde",
            "{n+1,k}~_q = sum_l binom_q(n,l) q^(l-k+1) {l,k-1}~_q",
            {},
            second(),
            informational=True,
            keep=200,
        ),
    ]
    return combine(
        "conv-recurrences", "printed q-binomial convolution recurrences", {"n_max": n_max}, parts, informational=True
    )


def check_specialization(n_max: int) -> CheckReport:
    """Symbolic-q tables at q = 1 reproduce the classical table."""
    classical = nwc_second_table(CLASSICAL, n_max)
    parts = []
    for name, table in (
        ("tilde", nwc_second_table(Q_SYMBOLIC, n_max)),
        ("carlitz", carlitz_q_table(n_max)),
    ):
        at_one = table.evaluate(1)
        cases = (
            ({"n": n, "k": k}, at_one.entry(n, k), classical.entry(n, k))
            for n in range(n_max + 1)
            for k in range(n + 1)
        )
        parts.append(compare_cases(f"specialization/{name}", f"{name} table at q = 1 is classical", {}, cases))
    return combine("specialization-tables", "q-tables at q = 1 are classical", {"n_max": n_max}, parts)

