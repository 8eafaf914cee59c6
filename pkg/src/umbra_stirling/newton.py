"""Newton-Stirling numbers: divided differences of a polynomial at 0, 1, ..., k."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import ConsistencyError, IndexOutOfRange, InsufficientTerms
from .exact import Poly, divided_difference, newton_top_row
from .numeric import exp_rational, fixed_sum, render, to_fraction
from .reports import CheckReport, compare_cases
from .sequences import CLASSICAL
from .stirling import nwc_second


def _binomial_route(b: Poly, k: int) -> Fraction:
    total = Fraction(0)
    for l in range(k + 1):
        term = Fraction(b(l)) / (factorial(k - l) * factorial(l))
        total += term if (k - l) % 2 == 0 else -term
    return total


def newton_stirling(b: Poly, k: int) -> Fraction:
    """[0, 1, ..., k; b] by the forward-difference sum and by a divided
    difference table; the two must agree."""
    if k < 0:
        raise IndexOutOfRange("k must be non-negative")
    via_sum = _binomial_route(b, k)
    via_dd = Fraction(divided_difference(list(range(k + 1)), b))
    if via_sum != via_dd:
        raise ConsistencyError(f"Newton-Stirling routes disagree at k={k}: {via_sum} vs {via_dd}")
    return via_sum


def newton_stirling_row(b: Poly) -> list[Fraction]:
    """[0..k; b] for k = 0..deg b from a single divided-difference table."""
    if not b:
        return []
    return [Fraction(v) for v in newton_top_row(list(range(b.degree + 1)), b)]


def _falling(y: Poly, s: int) -> Poly:
    out = Poly((1,), y.var)
    for j in range(s):
        out = out * (y - j)
    return out


def b_ns(n: int, r: int, s: int) -> Poly:
    """prod_{j=1..n} [x + (j-1)(r-s)]^(falling s)."""
    x = Poly((0, 1), "x")
    out = Poly((1,), "x")
    for j in range(1, n + 1):
        out = out * _falling(x + (j - 1) * (r - s), s)
    return out


def generalized_S_rs(n: int, k: int, r: int, s: int) -> Fraction:
    """S_{r,s}(n,k) = (1/k!) sum_{l=s}^{k} (-1)^(k-l) C(k,l) b_ns(l; r, s).

    Zero for k < s (empty sum); k beyond n*s is out of range.
    """
    if n < 1 or s < 1 or r < s:
        raise ValueError("need positive n, s and r >= s")
    if k < 0 or k > n * s:
        raise IndexOutOfRange(f"k={k} outside [0, {n * s}]")
    if k < s:
        return Fraction(0)
    b = b_ns(n, r, s)
    total = Fraction(0)
    for l in range(s, k + 1):
        term = comb(k, l) * Fraction(b(l))
        total += term if (k - l) % 2 == 0 else -term
    value = total / factorial(k)
    if value != newton_stirling(b, k):
        raise ConsistencyError(f"S_{r},{s}({n},{k}) disagrees with its divided difference")
    return value


def newton_bell_rs(n: int, r: int, s: int) -> Fraction:
    return sum((generalized_S_rs(n, k, r, s) for k in range(s, n * s + 1)), Fraction(0))


def abel_goncharov_d(n: int, k: int) -> Fraction:
    """[0, 1/k, ..., (k-1)/k, 1; x^n], checked against the closed form and
    against k^(n-k) d = {n,k}."""
    if k < 1:
        raise IndexOutOfRange("k must be at least 1")
    nodes = [Fraction(j, k) for j in range(k + 1)]
    d = Fraction(divided_difference(nodes, Poly.monomial(n, "x")))
    closed = Fraction(0)
    for r in range(k + 1):
        term = comb(k, r) * Fraction(r**n, k**n)
        closed += term if (k - r) % 2 == 0 else -term
    closed *= Fraction(k**k, factorial(k))
    if n >= k and d != closed:
        raise ConsistencyError(f"d_{n},{k}: divided difference {d} vs closed form {closed}")
    if Fraction(k) ** (n - k) * d != nwc_second(CLASSICAL, n, k):
        raise ConsistencyError(f"k^(n-k) d_{n},{k} is not the Stirling number")
    return d


def check_abel_goncharov(n_max: int) -> CheckReport:
    def cases():
        for n in range(1, n_max + 1):
            for k in range(1, n + 1):
                d = abel_goncharov_d(n, k)
                yield {"n": n, "k": k}, Fraction(k) ** (n - k) * d, nwc_second(CLASSICAL, n, k)

    return compare_cases("abel-goncharov", "k^(n-k) d_{n,k} = {n,k}", {"n_max": n_max}, cases())


def check_s_rs_reduction(n_max: int) -> CheckReport:
    cases = (
        ({"n": n, "k": k}, generalized_S_rs(n, k, 1, 1), nwc_second(CLASSICAL, n, k))
        for n in range(1, n_max + 1)
        for k in range(1, n + 1)
    )
    return compare_cases("s-rs-reduction", "S_{1,1}(n,k) = {n,k}", {"n_max": n_max}, cases)


def ns_dobinski_numeric(b: Poly, x, terms: int, tol="1e-9") -> CheckReport:
    """e^(-x) sum_m b(m) x^m / m! against sum_k [0..k; b] x^k."""
    x = Fraction(x)
    tol = to_fraction(tol)
    if terms < max(b.degree, 0) + 10:
        raise InsufficientTerms(f"need at least deg b + 10 = {b.degree + 10} terms")
    powers = [Fraction(1)]

    def term(m):
        while len(powers) <= m:
            powers.append(powers[-1] * x / len(powers))
        return Fraction(b(m)) * powers[m]

    series = fixed_sum(term, terms, tol)
    # e^(-x) multiplies a sum of size about e^x, so scale its precision
    e = exp_rational(-x, min(tol / 1000, Fraction(1, 10**12)) / max(1, abs(series.value)))
    lhs = e.value * series.value
    row = newton_stirling_row(b)
    rhs = sum((c * x**k for k, c in enumerate(row)), Fraction(0))
    params = {"b": str(b), "x": x, "terms": terms, "tol": str(tol)}
    report = compare_cases(
        "ns-dob",
        "e^(-x) sum_m b(m) x^m/m! = sum_k [0..k; b] x^k",
        params,
        [({}, lhs, rhs)],
        equal=lambda a, c: abs(a - c) < tol,
    )
    report.details.update(
        lhs_approx=render(lhs),
        rhs=rhs,
        difference=render(abs(lhs - rhs)),
        last_term=render(series.last_term),
    )
    if report.witness:
        report.witness = {"lhs": render(lhs), "rhs": rhs}
    return report


def ns_bell(b_family, n: int) -> Fraction:
    """sum_k [0, 1, ..., k; b_n]; ``b_family`` maps n to a polynomial (or is one)."""
    b = b_family(n) if callable(b_family) and not isinstance(b_family, Poly) else b_family
    return sum(newton_stirling_row(b), Fraction(0))
