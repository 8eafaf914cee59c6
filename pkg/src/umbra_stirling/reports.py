"""Verdict records for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import Poly, RatFunc, TruncatedSeries, to_json

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"


def jsonable(x):
    """Recursively convert exact values for JSON output."""
    if isinstance(x, (bool, int, str)) or x is None:
        # plain ints are indices; exact scalars are Fractions
        return x
    if isinstance(x, (Fraction, Poly, RatFunc, TruncatedSeries)):
        return to_json(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, float):
        return x
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


@dataclass
class CheckReport:
    """Outcome of one identity check.

    ``witness`` holds the first failing index with both sides when the
    status is "fails".  Informational reports record what an identity does
    without asserting an outcome, so they never count as failures.
    """

    id: str
    status: str
    anchor: str
    params: dict = field(default_factory=dict)
    witness: dict | None = None
    informational: bool = False
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def failed_assertion(self) -> bool:
        return self.status == FAILS and not self.informational

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": self.status,
            "anchor": self.anchor,
            "informational": self.informational,
            "params": jsonable(self.params),
            "witness": jsonable(self.witness),
            "details": jsonable(self.details),
        }


def compare_cases(id, anchor, params, cases, *, informational=False, equal=None, keep=20):
    """Build a report from ``(index_dict, lhs, rhs)`` triples.

    Records how many cases ran, the first witness and up to ``keep``
    failing cases.  ``equal`` overrides exact equality (numeric checks).
    """
    eq = equal or (lambda a, b: a == b)
    checked = 0
    failures = []
    for index, lhs, rhs in cases:
        checked += 1
        if not eq(lhs, rhs):
            failures.append(dict(index, lhs=lhs, rhs=rhs))
    details = {"checked": checked, "failed": len(failures)}
    if failures:
        details["failures"] = failures[:keep]
    return CheckReport(
        id=id,
        status=FAILS if failures else HOLDS,
        anchor=anchor,
        params=params,
        witness=failures[0] if failures else None,
        informational=informational,
        details=details,
    )


def combine(id, anchor, params, parts, *, informational=False):
    """One report summarising several sub-reports.

    The combined verdict fails when any non-informational part fails;
    the witness is that part's witness.
    """
    asserted = [p for p in parts if not p.informational]
    failing = [p for p in asserted if p.status == FAILS]
    if informational:
        failing = [p for p in parts if p.status == FAILS]
    status = FAILS if failing else HOLDS
    if parts and all(p.status == NOT_APPLICABLE for p in parts):
        status = NOT_APPLICABLE
    witness = None
    if failing:
        witness = dict(failing[0].witness or {}, part=failing[0].id)
    return CheckReport(
        id=id,
        status=status,
        anchor=anchor,
        params=params,
        witness=witness,
        informational=informational,
        details={"parts": [p.to_json() for p in parts]},
    )


def not_applicable(id, anchor, params, reason: str) -> CheckReport:
    return CheckReport(id, NOT_APPLICABLE, anchor, params, details={"reason": reason})
