"""Set partitions by restricted growth strings, with the inv and cigl statistics.

An RGS ``a`` of length n has a[0] = 0 and a[i] <= 1 + max(a[:i]); position
i carries label a[i], labels numbered by first occurrence.  Position i is
element i + 1 of [n] for inv and element i of {0..n-1} for cigl.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .exact import Poly, q_symbol
from .reports import CheckReport, combine, compare_cases
from .stirling import carlitz_q, nwc_second
from .sequences import CLASSICAL, Q_SYMBOLIC

STATS = ("inv", "cigl")


def rgs(n: int):
    """Yield every restricted growth string of length n in lexicographic order.

    The yielded list is reused between steps; copy it to keep it.
    """
    if n == 0:
        yield []
        return
    a = [0] * n
    bound = [1] * n  # bound[i] = 1 + max(a[:i])
    bound[0] = 0
    while True:
        yield a
        i = n - 1
        while i > 0 and a[i] == bound[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(bound[i], a[i] + 1)
        for j in range(i + 1, n):
            a[j] = 0
            bound[j] = top


@dataclass(frozen=True)
class SetPartition:
    """Blocks in standard form.

    ``ground`` is "one" for [n] = {1..n}, blocks ordered by their maxima,
    or "zero" for {0..n-1}, with the block of 0 first.
    """

    blocks: tuple
    ground: str = "one"

    @classmethod
    def from_rgs(cls, a, ground: str = "one") -> "SetPartition":
        offset = 1 if ground == "one" else 0
        labelled: dict[int, list] = {}
        for i, lab in enumerate(a):
            labelled.setdefault(lab, []).append(i + offset)
        blocks = list(labelled.values())
        if ground == "one":
            blocks.sort(key=max)
        return cls(tuple(tuple(b) for b in blocks), ground)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def block_index(self) -> dict:
        """b_i: 1-based position of the block holding i."""
        return {x: j for j, block in enumerate(self.blocks, start=1) for x in block}

    def __str__(self):
        return "/".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def enumerate_partitions(n: int, k: int | None = None, ground: str = "one"):
    if n < 0:
        raise ValueError("n must be non-negative")
    for a in rgs(n):
        if k is None or (max(a) + 1 if a else 0) == k:
            yield SetPartition.from_rgs(a, ground)


def inv_statistic(p: SetPartition) -> int:
    """Pairs i > j with b_i < b_j, blocks ordered by maxima."""
    b = p.block_index()
    elems = sorted(b)
    return sum(1 for x in elems for y in elems if x > y and b[x] < b[y])


def cigl_statistic(p: SetPartition) -> int:
    """Sum of the block containing 0."""
    for block in p.blocks:
        if 0 in block:
            return sum(block)
    raise ValueError("cigl needs a partition of {0..n-1}")


def _inv_from_rgs(a, k: int) -> int:
    last = [0] * k
    for i, lab in enumerate(a):
        last[lab] = i
    rank = sorted(range(k), key=last.__getitem__)
    pos = [0] * k
    for r, lab in enumerate(rank):
        pos[lab] = r
    seen = [0] * k  # seen[r] = elements so far in block of rank r
    total = 0
    for lab in a:
        r = pos[lab]
        total += sum(seen[r + 1:])
        seen[r] += 1
    return total


def _cigl_from_rgs(a) -> int:
    return sum(i for i, lab in enumerate(a) if lab == 0)


@lru_cache(maxsize=64)
def _stat_counts(n: int, stat: str) -> dict:
    """k -> {statistic value: number of partitions}."""
    if stat not in STATS:
        raise ValueError(f"unknown statistic {stat!r}")
    out: dict[int, dict[int, int]] = {}
    for a in rgs(n):
        k = max(a) + 1 if a else 0
        s = _inv_from_rgs(a, k) if stat == "inv" else _cigl_from_rgs(a)
        bucket = out.setdefault(k, {})
        bucket[s] = bucket.get(s, 0) + 1
    return out


def _counts_poly(counts: dict) -> Poly:
    if not counts:
        return Poly((), "q")
    c = [0] * (max(counts) + 1)
    for s, m in counts.items():
        c[s] = m
    return Poly(c, "q")


def statistic_stirling(n: int, k: int, stat: str) -> Poly:
    """sum over k-block partitions of q^stat, as a polynomial in q."""
    return _counts_poly(_stat_counts(n, stat).get(k, {}))


def statistic_bell(n: int, stat: str) -> Poly:
    total: dict[int, int] = {}
    for bucket in _stat_counts(n, stat).values():
        for s, m in bucket.items():
            total[s] = total.get(s, 0) + m
    return _counts_poly(total)


@lru_cache(maxsize=None)
def gauss_poly(n: int, k: int) -> Poly:
    """Gaussian binomial as a polynomial in q: [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if k < 0 or k > n:
        return Poly((), "q")
    if k == 0 or k == n:
        return Poly((1,), "q")
    return gauss_poly(n - 1, k - 1) + gauss_poly(n - 1, k).shift(k)


def check_inv_recurrence(n_max: int) -> CheckReport:
    """{n+1,k}^inv = sum_l [n,l]_q {n-l,k-1}^inv for rows n + 1 <= n_max."""

    def cases():
        for n in range(n_max):
            for k in range(1, n + 2):
                rhs = Poly((), "q")
                for l in range(n + 1):
                    rhs = rhs + gauss_poly(n, l) * statistic_stirling(n - l, k - 1, "inv")
                yield {"n": n, "k": k}, statistic_stirling(n + 1, k, "inv"), rhs

    return compare_cases(
        "inv-recurrence", "{n+1,k}^inv = sum_l binom_q(n,l) {n-l,k-1}^inv", {"n_max": n_max}, cases()
    )


def _falling_int(k: int) -> Poly:
    out = Poly((1,), "x")
    for j in range(k):
        out = out * Poly((-j, 1), "x")
    return out


def cigler_lhs(n: int) -> Poly:
    """x (x - 1 + q) ... (x - 1 + q^(n-1)) over Z[q]."""
    out = Poly((1,), "x")
    for j in range(n):
        c0 = Poly.monomial(j, "q") - 1
        out = out * Poly((c0, 1), "x")
    return out


def check_cigl(n_max: int) -> CheckReport:
    """Printed cigl recurrence (informational) and the Cigler identity."""

    def printed():
        for n in range(n_max):
            for k in range(1, n + 2):
                rhs = Poly((), "q")
                for l in range(n + 1):
                    term = gauss_poly(n, l) * statistic_stirling(n - l, k - 1, "cigl")
                    rhs = rhs + term.shift(comb(n - l + 1, 2))
                yield {"n": n, "k": k}, statistic_stirling(n + 1, k, "cigl"), rhs

    def identity():
        for n in range(n_max + 1):
            rhs = Poly((), "x")
            for k in range(n + 1):
                rhs = rhs + _falling_int(k).scale(statistic_stirling(n, k, "cigl"))
            yield {"n": n}, cigler_lhs(n), rhs

    parts = [
        compare_cases(
            "cigl/printed-recurrence",
            "{n+1,k}^cigl = sum_l binom_q(n,l) q^C(n-l+1,2) {n-l,k-1}^cigl",
            {},
            printed(),
            informational=True,
            keep=200,
        ),
        compare_cases(
            "cigl/cigler-identity",
            "x(x-1+q)...(x-1+q^(n-1)) = sum_k {n,k}^cigl x^(falling k)",
            {},
            identity(),
        ),
    ]
    return combine("cigl", "cigl statistic: printed recurrence and Cigler identity", {"n_max": n_max}, parts)


def _as_q_poly(x) -> Poly | None:
    """A polynomial view of an element of Q(q), or None when it is not one."""
    if isinstance(x, Poly):
        return x
    if hasattr(x, "den"):
        return x.num if x.den.degree == 0 else None
    return Poly((x,), "q")


def family_match_report(n_max: int) -> CheckReport:
    """Which named q-Stirling family each statistic reproduces.

    For every 0 <= k <= n <= n_max the statistic polynomial is compared
    with {n,k}~_q, {n,k}_q and q^(-C(k,2)) {n,k}_q.  The claim under test is
    that both statistics are counted by the Carlitz family; the report is
    informational and carries the full match table.
    """
    q = q_symbol()
    per_stat = {}
    parts = []
    for stat in STATS:
        entries = []
        overall = {"tilde": True, "carlitz": True, "carlitz-rescaled": True}
        for n in range(n_max + 1):
            for k in range(n + 1):
                s = statistic_stirling(n, k, stat)
                refs = {
                    "tilde": _as_q_poly(nwc_second(Q_SYMBOLIC, n, k)),
                    "carlitz": _as_q_poly(carlitz_q(n, k)),
                    "carlitz-rescaled": _as_q_poly(q ** (-comb(k, 2)) * carlitz_q(n, k)),
                }
                matches = [name for name, ref in refs.items() if ref is not None and ref == s]
                for name in overall:
                    overall[name] = overall[name] and name in matches
                entries.append({"n": n, "k": k, "matches": matches or ["neither"]})
        per_stat[stat] = {
            "overall": [name for name, ok in overall.items() if ok] or ["neither"],
            "entries": entries,
        }
        cases = (
            ({"n": n, "k": k}, statistic_stirling(n, k, stat), _as_q_poly(carlitz_q(n, k)))
            for n in range(n_max + 1)
            for k in range(n + 1)
        )
        parts.append(
            compare_cases(f"family-match/{stat}", f"sum_pi q^{stat}(pi) = {{n,k}}_q", {}, cases, informational=True)
        )
    report = combine(
        "family-match",
        "statistics counted by q-Stirling families",
        {"n_max": n_max},
        parts,
        informational=True,
    )
    report.details["families"] = per_stat
    return report


def check_statistic_specialization(n_max: int) -> CheckReport:
    """Both statistic polynomials at q = 1 count k-block partitions."""
    parts = [
        compare_cases(
            f"statistic-specialization/{stat}",
            f"sum_pi 1^{stat}(pi) = {{n,k}}",
            {},
            (
                ({"n": n, "k": k}, statistic_stirling(n, k, stat)(1), nwc_second(CLASSICAL, n, k))
                for n in range(n_max + 1)
                for k in range(n + 1)
            ),
        )
        for stat in STATS
    ]
    return combine("statistic-specialization", "statistic polynomials at q = 1", {"n_max": n_max}, parts)
