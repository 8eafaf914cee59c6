import pytest
from hypothesis import given
from hypothesis import strategies as st

from umbra_stirling.exact import Poly
from umbra_stirling.partitions import (
    SetPartition,
    check_cigl,
    check_inv_recurrence,
    check_statistic_specialization,
    cigl_statistic,
    enumerate_partitions,
    family_match_report,
    gauss_poly,
    inv_statistic,
    rgs,
    statistic_bell,
    statistic_stirling,
    _cigl_from_rgs,
    _inv_from_rgs,
)

BELL = [1, 1, 2, 5, 15, 52, 203, 877]


def all_partitions(items):
    """Recursive set partitions, independent of the RGS generator."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


@pytest.mark.parametrize("n", range(8))
def test_rgs_count_and_order(n):
    strings = [tuple(a) for a in rgs(n)]
    assert len(strings) == BELL[n]
    assert strings == sorted(strings)
    assert len(set(strings)) == len(strings)


@pytest.mark.parametrize("n", range(1, 7))
def test_rgs_partitions_match_recursive_ones(n):
    ours = {frozenset(frozenset(b) for b in p.blocks) for p in enumerate_partitions(n)}
    theirs = {frozenset(frozenset(b) for b in p) for p in all_partitions(list(range(1, n + 1)))}
    assert ours == theirs


def test_standard_form():
    p = SetPartition.from_rgs([0, 1, 0, 2])
    assert p.blocks == ((2,), (1, 3), (4,))
    assert str(p) == "{2}/{1,3}/{4}"
    z = SetPartition.from_rgs([0, 1, 0, 2], ground="zero")
    assert z.blocks[0] == (0, 2)


def test_statistics_on_examples():
    p = SetPartition.from_rgs([0, 1, 0, 2])
    # blocks by maxima: {2}, {1,3}, {4}; b = (2, 1, 2, 3); pair (2, 1) has b_2 < b_1
    assert inv_statistic(p) == 1
    z = SetPartition.from_rgs([0, 1, 0, 2], ground="zero")
    assert cigl_statistic(z) == 2


@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from([tuple(a) for a in rgs(n)])))
def test_fast_statistics_match_definitions(a):
    k = max(a) + 1
    assert _inv_from_rgs(list(a), k) == inv_statistic(SetPartition.from_rgs(a))
    assert _cigl_from_rgs(a) == cigl_statistic(SetPartition.from_rgs(a, "zero"))


def test_statistic_polynomials():
    assert statistic_stirling(4, 2, "inv") == Poly((3, 2, 2), "q")
    assert statistic_stirling(3, 3, "cigl") == Poly((1,), "q")
    assert statistic_bell(3, "cigl") == Poly((2, 1, 1, 1), "q")
    for n in range(7):
        assert statistic_bell(n, "inv")(1) == BELL[n]


def test_gauss_poly():
    assert gauss_poly(4, 2) == Poly((1, 1, 2, 1, 1), "q")
    assert gauss_poly(3, 5) == Poly((), "q")


def test_checks():
    assert check_inv_recurrence(7).holds
    assert check_statistic_specialization(7).holds
    rep = check_cigl(6)
    assert rep.holds
    printed = next(p for p in rep.details["parts"] if p["id"] == "cigl/printed-recurrence")
    assert printed["status"] == "fails" and printed["informational"]


def test_family_match_records_every_entry():
    rep = family_match_report(5)
    assert rep.informational
    fam = rep.details["families"]
    assert set(fam) == {"inv", "cigl"}
    assert len(fam["inv"]["entries"]) == sum(n + 1 for n in range(6))
    small = [e for e in fam["inv"]["entries"] if e["n"] <= 3]
    assert all("tilde" in e["matches"] for e in small)


def test_enumerate_filters_by_blocks():
    assert sum(1 for _ in enumerate_partitions(5, 2)) == 15
    assert all(len(p.blocks) == 2 for p in enumerate_partitions(5, 2))
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))
