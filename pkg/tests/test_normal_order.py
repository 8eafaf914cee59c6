from fractions import Fraction

import pytest

from umbra_stirling.errors import SingularSystem
from umbra_stirling.exact import q_symbol
from umbra_stirling.normal_order import (
    INCONSISTENT,
    UNIQUE,
    build_system,
    check_q_normal_order,
    check_non_q_normal_order,
    check_q_shift_identity,
    classical_limit,
    normal_order_solve,
)
from umbra_stirling.sequences import CLASSICAL, FERMIONIC_F, FIBONOMIAL, Q_SYMBOLIC, custom, hyper_l
from umbra_stirling.stirling import nwc_second_table

q = q_symbol()


def test_fibonomial_rows():
    system = build_system(FIBONOMIAL, 2, 4)
    assert system.rows[0] == ((1, 0, 0), 0)
    assert system.rows[1] == ((1, 1, 0), 1)
    assert system.rows[2] == ((1, 1, 1), 1)
    assert system.rows[3] == ((1, 2, 2), 4)


def test_probe_must_reach_past_n():
    with pytest.raises(ValueError):
        build_system(CLASSICAL, 3, 4)


def test_fibonomial_witness():
    out = normal_order_solve(FIBONOMIAL, 2, 5)
    assert out.status == INCONSISTENT
    assert out.witness == {"N": 3, "lhs": 4, "rhs": 2}


def test_symbolic_q_solution():
    out = normal_order_solve(Q_SYMBOLIC, 2, 6)
    assert out.status == UNIQUE
    assert out.coefficients[1:] == (1, q)


@pytest.mark.parametrize("n", range(6))
def test_classical_solution_is_stirling(n):
    out = normal_order_solve(CLASSICAL, n)
    assert out.consistent
    assert out.coefficients == nwc_second_table(CLASSICAL, n).row(n)
    assert classical_limit(n) == list(out.coefficients)


def test_trivial_powers():
    assert normal_order_solve(hyper_l(2), 0).coefficients == (1,)
    assert normal_order_solve(FIBONOMIAL, 1).coefficients == (0, 1)


def test_singular_pivot():
    with pytest.raises(SingularSystem):
        normal_order_solve(FERMIONIC_F, 3)


def test_q_family_certificate():
    assert check_q_shift_identity(8).holds
    assert check_q_normal_order(5).holds


def test_other_sequences_break():
    samples = [FIBONOMIAL, hyper_l(2), custom([Fraction(v) for v in (0, 1, 3, 4, 7, 9, 12, 15, 20, 22, 25, 30, 31)])]
    rep = check_non_q_normal_order(samples, 4)
    assert rep.holds
    assert all(o["status"] == INCONSISTENT for o in rep.details["outcomes"])
    with pytest.raises(ValueError):
        check_non_q_normal_order([Q_SYMBOLIC], 3)
