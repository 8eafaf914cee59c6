"""Bell numbers of the psi-families and Dobinski-type series.

Exact identities are checked with exact arithmetic; infinite series are
evaluated as rational partial sums (see :mod:`numeric`) and compared
within a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .errors import IndexOutOfRange, NotConvergent, RepeatedNodes, ZeroFactorial
from .exact import (
    Poly,
    TruncatedSeries,
    evaluate_scalar,
    q_symbol,
    series_exp,
    series_inverse,
    series_mul,
    to_json,
)
from .numeric import converge, fixed_sum, render, to_fraction
from .partitions import cigler_lhs, statistic_bell, statistic_stirling
from .reports import (
    NOT_APPLICABLE,
    CheckReport,
    combine,
    compare_cases,
    not_applicable,
)
from .sequences import (
    CLASSICAL,
    Q_SYMBOLIC,
    Kind,
    PsiSequence,
    exp_psi_series,
    gamma_gl,
    psi_binomial,
    psi_factorial,
    psi_falling_power,
    psi_value,
    q_gauss,
    sequence_spec,
)
from .stirling import carlitz_q_table, nwc_second_table


class BellFamily(str, Enum):
    NWC = "nwc"
    CARLITZ_Q = "carlitz"
    UMBRAL_BINOMIAL = "umbral"
    CLASSICAL = "classical"
    INV = "inv"
    CIGL = "cigl"
    PREFAB = "prefab"


@dataclass(frozen=True)
class BellSequence:
    family: BellFamily
    seq: PsiSequence | None
    values: tuple

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "seq": None if self.seq is None else sequence_spec(self.seq),
            "values": [to_json(v) for v in self.values],
        }


# --- Bell values ---------------------------------------------------------------


def bell_nwc(seq: PsiSequence, n: int):
    """B~_n(psi), the row sum of the tilde table."""
    return nwc_second_table(seq, n).row_sum(n)


def bell_carlitz(n: int, q=None):
    """B_n(q) as the Carlitz row sum (symbolic, or at a numeric q)."""
    value = carlitz_q_table(n).row_sum(n)
    return value if q is None else evaluate_scalar(value, Fraction(q))


def bell_umbral_binomial(seq: PsiSequence, n_max: int) -> BellSequence:
    """B_0 = 1, B_(n+1) = sum_k binom_psi(n,k) B_k."""
    if not seq.flags.invertible_factorials:
        raise ZeroFactorial(f"{sequence_spec(seq)} has a vanishing factorial")
    vals = [seq.one]
    for n in range(n_max):
        vals.append(sum((psi_binomial(seq, n, k) * vals[k] for k in range(n + 1)), seq.zero))
    return BellSequence(BellFamily.UMBRAL_BINOMIAL, seq, tuple(vals))


def check_bell_umbral(seq: PsiSequence, n_max: int) -> CheckReport:
    """Umbral-binomial Bell numbers against B~_n(psi); asserted only classically."""
    umbral = bell_umbral_binomial(seq, n_max).values
    cases = (({"n": n}, umbral[n], bell_nwc(seq, n)) for n in range(n_max + 1))
    return compare_cases(
        "bell-umbral",
        "B(psi)_(n+1) = sum_k binom_psi(n,k) B(psi)_k versus B~_n(psi)",
        {"seq": sequence_spec(seq), "n_max": n_max},
        cases,
        informational=seq.kind is not Kind.CLASSICAL,
    )


def bell_sequence(family: BellFamily | str, seq: PsiSequence | None, n_max: int, q=None) -> BellSequence:
    family = BellFamily(family)
    if family is BellFamily.NWC:
        t = nwc_second_table(seq, n_max)
        vals = [t.row_sum(n) for n in range(n_max + 1)]
    elif family is BellFamily.CLASSICAL:
        t = nwc_second_table(CLASSICAL, n_max)
        vals = [t.row_sum(n) for n in range(n_max + 1)]
        seq = CLASSICAL
    elif family is BellFamily.CARLITZ_Q:
        t = carlitz_q_table(n_max, q)
        vals = [t.row_sum(n) for n in range(n_max + 1)]
        seq = t.seq
    elif family is BellFamily.UMBRAL_BINOMIAL:
        return bell_umbral_binomial(seq, n_max)
    elif family is BellFamily.PREFAB:
        return prefab_bell(q, n_max)
    else:
        vals = [statistic_bell(n, family.value) for n in range(n_max + 1)]
        seq = None
    return BellSequence(family, seq, tuple(vals))


# --- epsilon coefficients ----------------------------------------------------------


def _require_distinct(seq: PsiSequence, upto: int) -> list:
    nodes = [psi_value(seq, j) for j in range(upto + 1)]
    if not seq.flags.distinct_nodes or len(set(nodes)) != len(nodes):
        raise RepeatedNodes(f"{sequence_spec(seq)} repeats a node")
    return nodes


def epsilon_coefficient(seq: PsiSequence, r: int, K: int):
    """eps_K(psi, r) = r_psi! sum_{k=r}^{K} prod_{j<=k, j!=r} (r_psi - j_psi)^(-1)."""
    if not 0 <= r <= K:
        raise IndexOutOfRange(f"need 0 <= r <= K, got r={r}, K={K}")
    nodes = _require_distinct(seq, K)
    x = nodes[r]
    prod = seq.one
    for j in range(r):
        prod = prod / (x - nodes[j])
    total = prod
    for k in range(r + 1, K + 1):
        prod = prod / (x - nodes[k])
        total = total + prod
    return psi_factorial(seq, r) * total


def epsilon_literal(seq: PsiSequence, r: int, K: int):
    """The printed series for eps truncated at K.

    For symbolic q this is sum (-1)^(k-r) q^(-C(r,2)) / (k-r)_q!; otherwise
    the factorial of k_psi - r_psi is read as (k-r)_psi!, which is the only
    reading that typechecks beyond the classical case.
    """
    q_form = seq.kind is Kind.QGAUSS
    total = seq.zero
    for k in range(r, K + 1):
        term = 1 / psi_factorial(seq, k - r)
        total = total + term if (k - r) % 2 == 0 else total - term
    if q_form:
        base = q_symbol() if seq.q is None else seq.q
        total = total * base ** (-comb(r, 2))
    return total


def _dobinski_sum(seq, n, K, eps):
    return sum(
        (eps[r] * psi_value(seq, r) ** n / psi_factorial(seq, r) for r in range(K + 1)),
        seq.zero,
    )


def check_dobinski_rearrangement(seq: PsiSequence, n: int, K: int | None = None) -> CheckReport:
    """sum_{r<=K} eps_K(psi,r) r_psi^n / r_psi! = B~_n(psi), exactly, for K >= n."""
    K = n if K is None else K
    if K < n:
        raise IndexOutOfRange(f"need K >= n, got K={K}, n={n}")
    eps = [epsilon_coefficient(seq, r, K) for r in range(K + 1)]
    lhs = _dobinski_sum(seq, n, K, eps)
    return compare_cases(
        "dobinski-rearrangement",
        "B~_n(psi) = sum_r eps(psi,r) r_psi^n / r_psi!",
        {"seq": sequence_spec(seq), "n": n, "K": K},
        [({"n": n}, lhs, bell_nwc(seq, n))],
    )


def check_epsilon_literal(seq: PsiSequence, K: int) -> CheckReport:
    """Printed eps series against the product form, coefficient by
    coefficient and inside the Dobinski sum (informational)."""
    product = [epsilon_coefficient(seq, r, K) for r in range(K + 1)]
    literal = [epsilon_literal(seq, r, K) for r in range(K + 1)]
    informational = seq.kind is not Kind.CLASSICAL
    coeffs = compare_cases(
        "epsilon-literal/coefficients",
        "printed eps(psi,r) = product-form eps(psi,r)",
        {},
        (({"r": r}, literal[r], product[r]) for r in range(K + 1)),
        informational=informational,
        keep=K + 1,
    )
    sums = compare_cases(
        "epsilon-literal/dobinski",
        "sum_r printed eps(psi,r) r_psi^n / r_psi! = B~_n(psi)",
        {},
        (({"n": n}, _dobinski_sum(seq, n, K, literal), bell_nwc(seq, n)) for n in range(K + 1)),
        informational=informational,
        keep=K + 1,
    )
    return combine(
        "epsilon-literal",
        "printed eps series versus product form",
        {"seq": sequence_spec(seq), "K": K},
        [coeffs, sums],
        informational=informational,
    )


def check_exp_pol_II(seq: PsiSequence, n: int, x_sample=1, K: int | None = None) -> CheckReport:
    """sum_r eps_K(psi,r) r_psi^n x^r / r_psi! against phi~_n(psi, x).

    At x = 1 this is the Dobinski rearrangement and is asserted; at other
    x the verdict is informational.
    """
    x = Fraction(x_sample)
    K = max(n, 0) if K is None else K
    eps = [epsilon_coefficient(seq, r, K) for r in range(K + 1)]
    lhs = sum(
        (eps[r] * psi_value(seq, r) ** n * x**r / psi_factorial(seq, r) for r in range(K + 1)),
        seq.zero,
    )
    row = nwc_second_table(seq, n).row(n)
    rhs = sum((c * x**k for k, c in enumerate(row)), seq.zero)
    return compare_cases(
        "exp-pol-II",
        "phi~_n(psi,x) = sum_r eps(psi,r) r_psi^n x^r / r_psi!",
        {"seq": sequence_spec(seq), "n": n, "x": x, "K": K},
        [({"n": n, "x": x}, lhs, rhs)],
        informational=x != 1,
    )


def check_egf_rearrangement(seq: PsiSequence, n_max: int, K: int | None = None) -> CheckReport:
    """n_psi! [x^n] sum_r eps_K(psi,r) e_psi[r_psi x] / r_psi! = B~_n(psi)."""
    K = n_max if K is None else K
    if K < n_max:
        raise IndexOutOfRange("need K >= n_max")
    eps = [epsilon_coefficient(seq, r, K) for r in range(K + 1)]
    base = exp_psi_series(seq, n_max)
    total = TruncatedSeries([seq.zero], n_max)
    for r in range(K + 1):
        total = total + base.scale_argument(psi_value(seq, r)) * (eps[r] / psi_factorial(seq, r))
    cases = (({"n": n}, total[n] * psi_factorial(seq, n), bell_nwc(seq, n)) for n in range(n_max + 1))
    return compare_cases(
        "egf-rearrangement",
        "sum_n B~_n x^n / n_psi! = sum_r eps(psi,r) e_psi[r_psi x] / r_psi!",
        {"seq": sequence_spec(seq), "n_max": n_max, "K": K},
        cases,
    )


# --- numeric Dobinski series --------------------------------------------------------

VARIANTS = ("classical", "carlitzQ", "milne", "psi", "cigl")
_ALIASES = {"q": "carlitzQ", "carlitz": "carlitzQ"}


def _exp_psi_one(seq: PsiSequence, tol: Fraction):
    return converge(lambda k: Fraction(1) / psi_factorial(seq, k), tol / 10**6).value


def _require_convergent(seq: PsiSequence):
    if not seq.flags.numeric_convergent:
        raise NotConvergent(f"series for {sequence_spec(seq)} is not known to converge")


def dobinski_numeric(
    variant: str, n: int, terms: int = 80, tol="1e-9", seq: PsiSequence | None = None, q=None, oracle=None
) -> CheckReport:
    """Evaluate one Dobinski-type series as a rational partial sum.

    ``classical`` uses e^(-1) sum k^n/k!; ``carlitzQ`` and ``milne`` need a
    numeric q; ``psi`` takes any convergent sequence; ``cigl`` sums
    m(m+q-1)...(m-1+q^(n-1))/m! against Poisson(1).  ``oracle`` replaces
    the built-in reference value.
    """
    variant = _ALIASES.get(variant, variant)
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    tol = to_fraction(tol)
    if variant in ("carlitzQ", "milne", "cigl"):
        if q is None:
            raise ValueError(f"variant {variant} needs a numeric q")
        q = Fraction(q)
    if variant == "classical":
        seq = CLASSICAL
    elif variant in ("carlitzQ", "milne"):
        seq = q_gauss(q)
    elif variant == "cigl":
        seq = CLASSICAL
    elif seq is None:
        raise ValueError("variant psi needs a sequence")
    _require_convergent(seq)
    norm = _exp_psi_one(seq, tol)
    params = {"variant": variant, "n": n, "terms": terms, "tol": str(tol), "seq": sequence_spec(seq)}
    if q is not None:
        params["q"] = q

    if variant == "milne":
        term = lambda k: (psi_value(seq, k) ** n / psi_factorial(seq, k - 1)) if k >= 1 else Fraction(0)
        oracle = bell_carlitz(n + 1, q)
        anchor = "B_(q,n+1) = exp_q(1)^(-1) sum_{k>=1} k_q^n / (k-1)_q!"
    elif variant == "cigl":
        poly = Poly([evaluate_scalar(_q_poly_value(c, q), q) for c in cigler_lhs(n).coeffs], "x")
        term = lambda m: Fraction(poly(m)) / psi_factorial(CLASSICAL, m)
        oracle = sum((statistic_stirling(n, k, "cigl")(q) for k in range(n + 1)), Fraction(0))
        anchor = "e^(-1) sum_m m(m+q-1)...(m-1+q^(n-1))/m! = sum_k {n,k}^cigl_q"
    else:
        term = lambda k: psi_value(seq, k) ** n / psi_factorial(seq, k)
        if variant == "classical" or seq.kind is Kind.CLASSICAL:
            oracle = bell_nwc(CLASSICAL, n)
        elif seq.kind is Kind.QGAUSS:
            oracle = bell_carlitz(n, seq.q)
        else:
            oracle = None
        anchor = "B_n(psi) = exp_psi(1)^(-1) sum_k k_psi^n / k_psi!"
    if oracle is not None:
        oracle = Fraction(oracle)
    partial = fixed_sum(term, terms, tol)
    value = partial.value / norm
    details = {"value_approx": render(value), "last_term": render(partial.last_term)}
    if oracle is None:
        rep = CheckReport(f"dobinski/{variant}", NOT_APPLICABLE, anchor, params, informational=True, details=details)
        rep.details["reason"] = "no closed-form value to compare with"
        return rep
    rep = compare_cases(
        f"dobinski/{variant}",
        anchor,
        params,
        [({"n": n}, value, oracle)],
        equal=lambda a, b: abs(a - b) < tol,
    )
    rep.details.update(details, oracle=oracle, difference=render(abs(value - oracle)))
    if rep.witness:
        rep.witness = {"n": n, "lhs": render(value), "rhs": oracle}
    return rep


def _q_poly_value(c, q):
    return c(q) if isinstance(c, Poly) else Fraction(c)


def psi_poisson_moment_check(seq: PsiSequence, n_max: int, terms: int = 80, tol="1e-9") -> CheckReport:
    """exp_psi(1)^(-1) sum_k k_psi^(falling n) / k_psi! = 1 for n <= n_max."""
    _require_convergent(seq)
    tol = to_fraction(tol)
    norm = _exp_psi_one(seq, tol)

    def cases():
        for n in range(n_max + 1):
            partial = fixed_sum(lambda k: psi_falling_power(seq, k, n) / psi_factorial(seq, k), terms, tol)
            yield {"n": n}, partial.value / norm, Fraction(1)

    rep = compare_cases(
        "poisson-moments",
        "L_psi(X_psi^(falling n)) = 1",
        {"seq": sequence_spec(seq), "n_max": n_max, "terms": terms, "tol": str(tol)},
        cases(),
        equal=lambda a, b: abs(a - b) < tol,
    )
    if rep.witness:
        rep.witness = dict(rep.witness, lhs=render(rep.witness["lhs"]))
        rep.details["failures"] = [dict(f, lhs=render(f["lhs"])) for f in rep.details["failures"]]
    return rep


def psi_poisson_pmf(seq: PsiSequence, lam, n: int, terms: int = 80, tol="1e-9"):
    """p_n = exp_psi(lam)^(-1) lam^n / n_psi!, with two checks.

    Returns ``(p_n, report)``.  The report confirms that p_n equals
    [d_psi^n G / n_psi!] at t = 0 for G(t) = sum_{m<=terms} p_m t^m and
    that the probabilities sum to 1 within tol.
    """
    _require_convergent(seq)
    lam = Fraction(lam)
    tol = to_fraction(tol)
    if seq.kind is Kind.QGAUSS and 0 < seq.q < 1 and abs(lam) * (1 - seq.q) >= 1:
        raise NotConvergent(f"exp_q(lambda) diverges for |lambda| >= 1/(1-q)")
    norm = converge(lambda k: lam**k / psi_factorial(seq, k), tol / 10**6).value
    top = max(terms, n)
    probs = [lam**m / psi_factorial(seq, m) / norm for m in range(top + 1)]
    g = Poly(probs, "t")
    for _ in range(n):
        g = Poly([c * psi_value(seq, i) for i, c in enumerate(g.coeffs)][1:], "t")
    extracted = Fraction(g(0)) / psi_factorial(seq, n)
    parts = [
        compare_cases("pmf/taylor", "p_n = [d_psi^n G / n_psi!]_(t=0)", {}, [({"n": n}, extracted, probs[n])]),
        compare_cases(
            "pmf/normalization",
            "sum_n p_n = 1",
            {},
            [({"terms": top}, sum(probs, Fraction(0)), Fraction(1))],
            equal=lambda a, b: abs(a - b) < tol,
        ),
    ]
    if parts[1].witness:
        parts[1].witness = dict(parts[1].witness, lhs=render(parts[1].witness["lhs"]))
        parts[1].details.pop("failures", None)
    report = combine(
        "poisson-pmf",
        "psi-Poisson distribution p_n = lambda^n / (n_psi! exp_psi(lambda))",
        {"seq": sequence_spec(seq), "lambda": lam, "n": n, "terms": top},
        parts,
    )
    report.details["p_n_approx"] = render(probs[n])
    return probs[n], report


# --- q-Bell recurrences -------------------------------------------------------------


def check_q_bell_recurrences(n_max: int) -> CheckReport:
    """Literal evaluation of the two printed q-Bell recurrences (informational)."""
    q = q_symbol()
    carl = carlitz_q_table(n_max)
    tilde = nwc_second_table(Q_SYMBOLIC, n_max)
    zero = Q_SYMBOLIC.zero

    def bbar(l):
        return sum((q**k * tilde.entry(l, k) for k in range(l + 1)), zero)

    def gauss(n, l):
        return psi_binomial(Q_SYMBOLIC, n, l)

    first = (
        (
            {"n": n},
            carl.row_sum(n + 1),
            sum((gauss(n, l) * q**l * carl.row_sum(l) for l in range(n + 1)), zero),
        )
        for n in range(n_max)
    )
    second = (
        (
            {"n": n},
            tilde.row_sum(n + 1),
            sum((gauss(n, l) * q ** (l + 1) * bbar(l) for l in range(n + 1)), zero),
        )
        for n in range(n_max)
    )
    parts = [
        compare_cases(
            "q-bell/carlitz",
            "B_q(n+1) = sum_l binom_q(n,l) q^l B_q(l)",
            {},
            first,
            informational=True,
            keep=n_max,
        ),
        compare_cases(
            "q-bell/tilde",
            "B~_q(n+1) = sum_l binom_q(n,l) q^(l+1) sum_k q^k {l,k}~_q",
            {},
            second,
            informational=True,
            keep=n_max,
        ),
    ]
    return combine("q-bell-recurrences", "printed q-Bell recurrences", {"n_max": n_max}, parts, informational=True)


# --- series-defined exponential polynomials ----------------------------------------


def gordian_S_psi(seq: PsiSequence, n: int, order: int | None = None):
    """exp_psi(x)^(-1) sum_k k_psi^n x^k / k_psi! to the given order.

    Returns ``(coefficients, report)``.  The report states whether every
    coefficient past x^n vanishes; for the classical and symbolic-q
    sequences it also asserts that the head equals sum_k {n,k} x^k
    (respectively the Carlitz row).
    """
    order = 2 * n + 8 if order is None else order
    if order < 2 * n + 8:
        raise ValueError("order must be at least 2n + 8")
    e = exp_psi_series(seq, order)
    weighted = TruncatedSeries([psi_value(seq, k) ** n * e[k] for k in range(order + 1)], order)
    result = series_mul(series_inverse(e), weighted)
    coeffs = list(result.coeffs)
    known = seq.kind is Kind.CLASSICAL or (seq.kind is Kind.QGAUSS and seq.q is None)
    tail = compare_cases(
        "gordian/tail",
        "coefficients beyond x^n vanish",
        {},
        (({"k": k}, coeffs[k], seq.zero) for k in range(n + 1, order + 1)),
        informational=not known,
    )
    parts = [tail]
    if known:
        row = (nwc_second_table(CLASSICAL, n) if seq.kind is Kind.CLASSICAL else carlitz_q_table(n)).row(n)
        parts.append(
            compare_cases(
                "gordian/head",
                "head coefficients are the exponential polynomial",
                {},
                (({"k": k}, coeffs[k], row[k]) for k in range(n + 1)),
            )
        )
    report = combine(
        "gordian",
        "phi_n(x,psi) = exp_psi(x)^(-1) sum_k k_psi^n x^k / k_psi! is a polynomial",
        {"seq": sequence_spec(seq), "n": n, "order": order},
        parts,
        informational=not known,
    )
    report.details["coefficients"] = coeffs
    return coeffs, report


def _psi_derivative_series(s: TruncatedSeries, seq: PsiSequence) -> TruncatedSeries:
    if s.order == 0:
        raise ValueError("cannot differentiate an order-0 series")
    return TruncatedSeries([s[k] * psi_value(seq, k) for k in range(1, s.order + 1)], s.order - 1)


def ghw_exp_poly_series(seq: PsiSequence, n: int, order: int | None = None) -> CheckReport:
    """exp_psi(x)^(-1) (x d_psi)^n exp_psi(x) computed by applying the operator,
    compared with :func:`gordian_S_psi` (and, classically, with sum {n,k} x^k)."""
    order = n + 8 if order is None else order
    if order < n + 8:
        raise ValueError("order must be at least n + 8")
    e = exp_psi_series(seq, order)
    f = e
    for _ in range(n):
        f = _psi_derivative_series(f, seq).shift_up()
    result = series_mul(series_inverse(e), f)
    gordian, _ = gordian_S_psi(seq, n, max(order, 2 * n + 8))
    parts = [
        compare_cases(
            "ghw/gordian",
            "operator form equals the series form",
            {},
            (({"k": k}, result[k], gordian[k]) for k in range(order + 1)),
        )
    ]
    if seq.kind is Kind.CLASSICAL:
        row = nwc_second_table(CLASSICAL, n).row(n)
        parts.append(
            compare_cases(
                "ghw/classical",
                "exp(-x) (xD)^n exp(x) = sum_k {n,k} x^k",
                {},
                (({"k": k}, result[k], row[k] if k <= n else Fraction(0)) for k in range(order + 1)),
            )
        )
    report = combine(
        "ghw-exp-poly",
        "phi_n(x) = exp_psi(x)^(-1) (x d_psi)^n exp_psi(x)",
        {"seq": sequence_spec(seq), "n": n, "order": order},
        parts,
    )
    report.details["coefficients"] = list(result.coeffs)
    return report


# --- prefab exponential formula ---------------------------------------------------


def prefab_bell(q, n_max: int) -> BellSequence:
    """D_n = n_gamma! [x^n] exp(exp_gamma(x) - 1) with n_gamma! = prod_i (q^n - q^i)."""
    seq = gamma_gl(q)
    e = exp_psi_series(seq, n_max)
    shifted = TruncatedSeries([seq.zero] + list(e.coeffs[1:]), n_max)
    composed = series_exp(shifted)
    vals = tuple(composed[n] * psi_factorial(seq, n) for n in range(n_max + 1))
    return BellSequence(BellFamily.PREFAB, seq, vals)


# --- specialisation ---------------------------------------------------------------


def check_bell_specialization(n_max: int) -> CheckReport:
    """Every q-family of Bell numbers at q = 1 is the classical sequence."""
    classical = [bell_nwc(CLASSICAL, n) for n in range(n_max + 1)]
    families = {
        "tilde": [evaluate_scalar(bell_nwc(Q_SYMBOLIC, n), 1) for n in range(n_max + 1)],
        "carlitz": [bell_carlitz(n, 1) for n in range(n_max + 1)],
        "umbral": [evaluate_scalar(v, 1) for v in bell_umbral_binomial(Q_SYMBOLIC, n_max).values],
        "inv": [Fraction(statistic_bell(n, "inv")(1)) for n in range(n_max + 1)],
        "cigl": [Fraction(statistic_bell(n, "cigl")(1)) for n in range(n_max + 1)],
    }
    parts = [
        compare_cases(
            f"bell-specialization/{name}",
            f"{name} Bell numbers at q = 1",
            {},
            (({"n": n}, vals[n], classical[n]) for n in range(n_max + 1)),
        )
        for name, vals in families.items()
    ]
    return combine("specialization-bell", "q-Bell families at q = 1 are classical", {"n_max": n_max}, parts)


def not_convergent_report(id: str, seq: PsiSequence) -> CheckReport:
    return not_applicable(id, "", {"seq": sequence_spec(seq)}, "series not known to converge")
