"""Exact rational partial sums of convergent series.

Nothing here uses floating point: sums are Fractions and stopping rules
compare Fractions.  Floats only appear when a value is rendered for a
human.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InsufficientTerms, NotConvergent

DEFAULT_EPS = Fraction(1, 10**15)


@dataclass(frozen=True)
class PartialSum:
    value: Fraction
    terms: int  # index of the last term included
    last_term: Fraction
    tail_bound: Fraction


def to_fraction(tol) -> Fraction:
    """Accept "1e-9", 1e-9 or a Fraction; floats go through their repr."""
    if isinstance(tol, Fraction):
        return tol
    return Fraction(str(tol))


def converge(term, eps: Fraction = DEFAULT_EPS, start: int = 0, max_terms: int = 20000) -> PartialSum:
    """Sum term(start), term(start+1), ... until the tail is certified below eps.

    With r = |term(k+1) / term(k)| < 1 the tail after term(k) is bounded by
    |term(k+1)| / (1 - r), assuming the ratios do not grow from there on.
    That holds for the factorial-type series used here.
    """
    total = Fraction(0)
    k = start
    t = term(k)
    while k < start + max_terms:
        total += t
        nxt = term(k + 1)
        if t == 0:
            if nxt == 0 and k > start:
                return PartialSum(total, k, t, Fraction(0))
        elif abs(t) < eps:
            r = abs(nxt / t)
            if r < 1:
                bound = abs(nxt) / (1 - r)
                if bound < eps:
                    return PartialSum(total, k, t, bound)
        t = nxt
        k += 1
    raise NotConvergent(f"no convergence within {max_terms} terms")


def fixed_sum(term, terms: int, tol: Fraction, start: int = 0) -> PartialSum:
    """Sum term(start..terms); the last term must be below tol/10."""
    total = Fraction(0)
    t = Fraction(0)
    for k in range(start, terms + 1):
        t = term(k)
        total += t
    if abs(t) >= tol / 10:
        raise InsufficientTerms(f"last term {float(t):.3e} is not below tol/10 = {float(tol / 10):.1e}")
    return PartialSum(total, terms, t, abs(t))


def exp_rational(x, eps: Fraction = DEFAULT_EPS) -> PartialSum:
    """e^x for rational x as a rational partial sum of the exponential series."""
    x = Fraction(x)

    memo = [Fraction(1)]

    def term(j):
        while len(memo) <= j:
            memo.append(memo[-1] * x / len(memo))
        return memo[j]

    # terms only start shrinking once j exceeds |x|
    start_small = int(abs(x)) + 1
    s = converge(term, eps)
    if s.terms < start_small:
        raise NotConvergent("exponential series stopped before its terms decrease")
    return s


def render(x) -> float:
    return float(x)
