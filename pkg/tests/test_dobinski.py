from fractions import Fraction
from math import factorial

import pytest

from umbra_stirling.dobinski import (
    BellFamily,
    bell_carlitz,
    bell_nwc,
    bell_sequence,
    bell_umbral_binomial,
    check_bell_specialization,
    check_bell_umbral,
    check_dobinski_rearrangement,
    check_egf_rearrangement,
    check_epsilon_literal,
    check_exp_pol_II,
    check_q_bell_recurrences,
    dobinski_numeric,
    epsilon_coefficient,
    ghw_exp_poly_series,
    gordian_S_psi,
    prefab_bell,
    psi_poisson_moment_check,
    psi_poisson_pmf,
)
from umbra_stirling.errors import NotConvergent, RepeatedNodes
from umbra_stirling.exact import q_symbol
from umbra_stirling.sequences import CLASSICAL, FIBONOMIAL, Q_SYMBOLIC, hyper_l, q_gauss

q = q_symbol()
HALF = Fraction(1, 2)
BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_bell_values():
    assert [bell_nwc(CLASSICAL, n) for n in range(9)] == BELL
    assert bell_nwc(Q_SYMBOLIC, 3) == 4 + q
    assert bell_carlitz(3) == 1 + 2 * q + q**2 + q**3
    assert bell_carlitz(3, HALF) == Fraction(19, 8)
    assert list(bell_umbral_binomial(CLASSICAL, 8).values) == BELL


def test_bell_sequence_families():
    assert bell_sequence("classical", None, 4).values == tuple(BELL[:5])
    assert bell_sequence(BellFamily.INV, None, 4).values[4](1) == 15
    data = bell_sequence("nwc", Q_SYMBOLIC, 2).to_json()
    assert data["family"] == "nwc" and len(data["values"]) == 3


def test_epsilon_classical_is_alternating_exponential_tail():
    K = 7
    for r in range(K + 1):
        expected = sum(Fraction((-1) ** j, factorial(j)) for j in range(K - r + 1))
        assert epsilon_coefficient(CLASSICAL, r, K) == expected


@pytest.mark.parametrize("seq", [CLASSICAL, Q_SYMBOLIC, hyper_l(2)], ids=str)
def test_exact_rearrangement(seq):
    for n in range(6):
        assert check_dobinski_rearrangement(seq, n).holds
    assert check_dobinski_rearrangement(seq, 3, 6).holds
    assert check_egf_rearrangement(seq, 4).holds


def test_rearrangement_needs_distinct_nodes():
    with pytest.raises(RepeatedNodes):
        check_dobinski_rearrangement(FIBONOMIAL, 3)


def test_exp_pol_two():
    assert check_exp_pol_II(Q_SYMBOLIC, 3).holds
    off = check_exp_pol_II(CLASSICAL, 3, 2)
    assert off.informational and off.status == "fails"


def test_epsilon_literal_detector():
    assert check_epsilon_literal(CLASSICAL, 5).holds
    rep = check_epsilon_literal(Q_SYMBOLIC, 4)
    assert rep.informational and rep.status == "fails"
    assert rep.witness["part"].startswith("epsilon-literal/")


@pytest.mark.parametrize(
    "variant, n, q_value, expected",
    [
        ("classical", 5, None, 52),
        ("carlitzQ", 3, HALF, Fraction(19, 8)),
        ("cigl", 2, HALF, Fraction(3, 2)),
    ],
)
def test_numeric_series(variant, n, q_value, expected):
    rep = dobinski_numeric(variant, n, 80, q=q_value)
    assert rep.holds
    assert Fraction(rep.details["oracle"]) == expected
    assert abs(rep.details["value_approx"] - float(expected)) < 1e-9


def test_milne_series():
    for n in range(5):
        assert dobinski_numeric("milne", n, 80, q=HALF).holds


def test_numeric_series_refuses_divergence():
    with pytest.raises(NotConvergent):
        dobinski_numeric("psi", 3, seq=Q_SYMBOLIC)
    with pytest.raises(ValueError):
        dobinski_numeric("carlitzQ", 3)


def test_fibonomial_series_has_no_oracle():
    rep = dobinski_numeric("psi", 3, 60, seq=FIBONOMIAL)
    assert rep.status == "not-applicable"


@pytest.mark.parametrize("seq", [CLASSICAL, q_gauss(HALF), FIBONOMIAL], ids=str)
def test_poisson_moments(seq):
    assert psi_poisson_moment_check(seq, 5).holds


def test_poisson_pmf():
    p, rep = psi_poisson_pmf(CLASSICAL, 1, 3)
    assert rep.holds
    assert abs(float(p) - 0.36787944117144233 / 6) < 1e-12
    with pytest.raises(NotConvergent):
        psi_poisson_pmf(q_gauss(HALF), 3, 2)


def test_gordian_series():
    coeffs, rep = gordian_S_psi(CLASSICAL, 2)
    assert coeffs[:5] == [0, 1, 1, 0, 0]
    assert rep.holds
    _, rep = gordian_S_psi(Q_SYMBOLIC, 3)
    assert rep.holds
    _, rep = gordian_S_psi(FIBONOMIAL, 3)
    assert rep.informational and rep.status == "fails"
    with pytest.raises(ValueError):
        gordian_S_psi(CLASSICAL, 2, 3)


def test_operator_form():
    assert ghw_exp_poly_series(CLASSICAL, 4).holds
    assert ghw_exp_poly_series(Q_SYMBOLIC, 3).holds


def test_prefab_values():
    assert prefab_bell(2, 3).values == (1, 1, 4, 57)
    assert prefab_bell(3, 2).values[2] == 7


def test_bell_detectors_and_specialization():
    rep = check_q_bell_recurrences(4)
    assert rep.informational and rep.status == "fails"
    assert check_bell_umbral(CLASSICAL, 6).holds
    assert check_bell_umbral(Q_SYMBOLIC, 4).informational
    assert check_bell_specialization(7).holds
