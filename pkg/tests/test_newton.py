from fractions import Fraction
from math import comb, factorial

import pytest

from umbra_stirling.errors import IndexOutOfRange, InsufficientTerms
from umbra_stirling.exact import Poly, parse_polynomial
from umbra_stirling.newton import (
    abel_goncharov_d,
    b_ns,
    check_abel_goncharov,
    check_s_rs_reduction,
    generalized_S_rs,
    newton_bell_rs,
    newton_stirling,
    newton_stirling_row,
    ns_bell,
    ns_dobinski_numeric,
)

X3 = Poly.monomial(3, "x")


def test_monomial_gives_stirling_numbers():
    assert newton_stirling_row(X3) == [0, 1, 3, 1]
    assert newton_stirling(X3, 2) == 3
    assert newton_stirling(Poly.monomial(5, "x"), 2) == 15
    assert newton_stirling(X3, 5) == 0


def test_rising_and_falling_bases():
    assert newton_stirling_row(parse_polynomial("x*(x-1)*(x-2)")) == [0, 0, 0, 1]
    # Lah numbers n!/k! C(n-1, k-1)
    lah = [0] + [Fraction(factorial(4), factorial(k)) * comb(3, k - 1) for k in range(1, 5)]
    assert newton_stirling_row(parse_polynomial("x*(x+1)*(x+2)*(x+3)")) == lah


def test_generalized_numbers():
    assert b_ns(2, 2, 1) == parse_polynomial("x*(x+1)")
    assert [newton_bell_rs(n, 2, 1) for n in range(1, 5)] == [1, 3, 13, 73]
    assert [newton_bell_rs(n, 3, 2) for n in range(1, 4)] == [1, 13, 355]
    assert generalized_S_rs(3, 0, 2, 1) == 0
    with pytest.raises(IndexOutOfRange):
        generalized_S_rs(2, 5, 2, 2)
    with pytest.raises(ValueError):
        generalized_S_rs(2, 1, 1, 2)


def test_abel_goncharov():
    assert abel_goncharov_d(3, 2) == Fraction(3, 2)
    assert check_abel_goncharov(7).holds
    assert check_s_rs_reduction(5).holds


@pytest.mark.parametrize("x, expected", [(Fraction(1, 2), Fraction(11, 8)), (1, 5), (2, 22)])
def test_dobinski_touchard(x, expected):
    rep = ns_dobinski_numeric(X3, x, 60)
    assert rep.holds
    assert rep.details["rhs"] == expected


def test_dobinski_needs_terms():
    with pytest.raises(InsufficientTerms):
        ns_dobinski_numeric(X3, 1, 12)


def test_bell_families():
    assert ns_bell(lambda n: Poly.monomial(n, "x"), 4) == 15
    assert ns_bell(parse_polynomial("x*(x-1)"), 2) == 1
    assert ns_bell(lambda n: b_ns(n, 2, 1), 3) == 13
