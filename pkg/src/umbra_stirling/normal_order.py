"""Normal ordering of (x d_psi)^n against the monomial action.

(x d_psi)^n x^N = N_psi^n x^N and x^k d_psi^k x^N = N_psi^(falling k) x^N,
so coefficients c_k with (x d_psi)^n = sum_k c_k x^k d_psi^k must solve

    sum_k c_k N_psi^(falling k) = N_psi^n        for every N >= 0.

Rows N = 1..n are triangular and fix c; later rows either agree or give an
explicit witness of inconsistency.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SingularSystem
from .exact import q_symbol
from .reports import CheckReport, combine, compare_cases, jsonable
from .sequences import Q_SYMBOLIC, Kind, PsiSequence, psi_falling_power, psi_value, sequence_spec
from .stirling import carlitz_q_table

UNIQUE = "unique-solution"
INCONSISTENT = "inconsistent"


def default_probe(n: int) -> int:
    return 2 * n + 4


@dataclass(frozen=True)
class NormalOrderSystem:
    seq: PsiSequence
    n: int
    rows: tuple  # rows[N] = (coefficients for k = 0..n, right-hand side)

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1


@dataclass(frozen=True)
class NormalOrderOutcome:
    seq: PsiSequence
    n: int
    status: str
    checked_range: int
    coefficients: tuple | None = None  # c_0..c_n
    witness: dict | None = None

    @property
    def consistent(self) -> bool:
        return self.status == UNIQUE

    def to_json(self) -> dict:
        return {
            "seq": sequence_spec(self.seq),
            "n": self.n,
            "status": self.status,
            "checked_range": self.checked_range,
            "coefficients": jsonable(self.coefficients),
            "witness": jsonable(self.witness),
        }


def _check_probe(n: int, N_max: int):
    if n < 0:
        raise ValueError("n must be non-negative")
    if N_max < n + 2:
        raise ValueError(f"need N_max >= n + 2 = {n + 2}, got {N_max}")


def build_system(seq: PsiSequence, n: int, N_max: int | None = None) -> NormalOrderSystem:
    N_max = default_probe(n) if N_max is None else N_max
    _check_probe(n, N_max)
    rows = []
    for N in range(N_max + 1):
        coeffs = tuple(psi_falling_power(seq, N, k) for k in range(n + 1))
        rows.append((coeffs, psi_value(seq, N) ** n))
    return NormalOrderSystem(seq, n, tuple(rows))


def normal_order_solve(seq: PsiSequence, n: int, N_max: int | None = None) -> NormalOrderOutcome:
    """Solve rows 0..n (row 0 only matters for n = 0) and substitute into the rest."""
    system = build_system(seq, n, N_max)
    zero = seq.zero
    c = [zero] * (n + 1)
    if n == 0:
        c[0] = seq.one
    for N in range(1, n + 1):
        coeffs, rhs = system.rows[N]
        pivot = coeffs[N]
        if pivot == 0:
            raise SingularSystem(f"pivot {N}_psi! vanishes for {sequence_spec(seq)}")
        acc = sum((coeffs[k] * c[k] for k in range(N)), zero)
        c[N] = (rhs - acc) / pivot
    for N, (coeffs, rhs) in enumerate(system.rows):
        value = sum((a * b for a, b in zip(coeffs, c)), zero)
        if value != rhs:
            return NormalOrderOutcome(
                seq, n, INCONSISTENT, system.n_max, witness={"N": N, "lhs": rhs, "rhs": value}
            )
    return NormalOrderOutcome(seq, n, UNIQUE, system.n_max, coefficients=tuple(c))


def check_q_shift_identity(N_max: int) -> CheckReport:
    """n_q - k_q = q^k (n-k)_q for 0 <= k <= n <= N_max, as rational functions."""
    q = q_symbol()
    cases = (
        (
            {"n": n, "k": k},
            psi_value(Q_SYMBOLIC, n) - psi_value(Q_SYMBOLIC, k),
            q**k * psi_value(Q_SYMBOLIC, n - k),
        )
        for n in range(N_max + 1)
        for k in range(n + 1)
    )
    return compare_cases("normal-order/q-shift", "n_q - k_q = q^k (n-k)_q", {"N_max": N_max}, cases)


def check_q_normal_order(n_max: int, N_max: int | None = None) -> CheckReport:
    """For symbolic q the normal-order coefficients are the Carlitz rows."""
    probe = default_probe(n_max) if N_max is None else N_max
    table = carlitz_q_table(n_max)

    def cases():
        for n in range(n_max + 1):
            out = normal_order_solve(Q_SYMBOLIC, n, max(probe, n + 2))
            if not out.consistent:
                yield {"n": n, "N": out.witness["N"]}, out.witness["lhs"], out.witness["rhs"]
                continue
            for k in range(n + 1):
                yield {"n": n, "k": k}, out.coefficients[k], table.entry(n, k)

    parts = [
        compare_cases(
            "normal-order/carlitz",
            "(x d_q)^n = sum_k {n,k}_q x^k d_q^k",
            {},
            cases(),
        ),
        check_q_shift_identity(probe),
    ]
    return combine(
        "normal-order-q",
        "normal ordering closes into a first-order recurrence for the q-sequence",
        {"n_max": n_max, "N_max": probe},
        parts,
    )


def check_non_q_normal_order(seqs, n_max: int, N_max: int | None = None) -> CheckReport:
    """Every listed sequence outside the q-family is inconsistent for some 2 <= n <= n_max.

    The per-(sequence, n) outcomes are kept in ``details["outcomes"]``.
    """
    for s in seqs:
        if s.kind is Kind.QGAUSS:
            raise ValueError("the sequence list must exclude the q-family")
    outcomes = []
    parts = []
    for s in seqs:
        found = []
        for n in range(2, n_max + 1):
            probe = default_probe(n) if N_max is None else max(N_max, n + 2)
            out = normal_order_solve(s, n, probe)
            outcomes.append(out.to_json())
            found.append(out)
        bad = [o for o in found if o.consistent]
        witness = None
        if bad:
            witness = {"n": bad[0].n, "coefficients": bad[0].coefficients}
        parts.append(
            CheckReport(
                f"normal-order-non-q/{sequence_spec(s)}",
                "fails" if bad else "holds",
                "no consistent normal ordering for 2 <= n",
                {"seq": sequence_spec(s)},
                witness=witness,
                details={"witnesses": {o.n: o.witness for o in found if not o.consistent}},
            )
        )
    report = combine(
        "normal-order-non-q",
        "normal ordering has no consistent solution outside the q-family",
        {"seqs": [sequence_spec(s) for s in seqs], "n_max": n_max, "N_max": N_max},
        parts,
    )
    report.details["outcomes"] = outcomes
    return report


def classical_limit(n: int) -> list:
    """The symbolic-q solution evaluated at q = 1."""
    out = normal_order_solve(Q_SYMBOLIC, n)
    return [c.evaluate(1) if hasattr(c, "evaluate") else c for c in out.coefficients]

