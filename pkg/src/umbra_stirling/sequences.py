"""Admissible sequences and the upside-down primitives built from them.

Every sequence is described by its values n_psi (``psi_value``); factorials,
psi-binomials, node polynomials and the psi-derivative are derived from
those values.  The convention 0_psi = 0 holds for every kind.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import IndexOutOfRange, RepeatedNodes, ZeroFactorial
from .exact import (
    Poly,
    RatFunc,
    TruncatedSeries,
    as_exact,
    lift_to_pq,
    one_like,
    p_symbol,
    q_symbol,
    scalar_tag,
    zero_like,
)

N_PROBE = 32


class Kind(str, Enum):
    CLASSICAL = "classical"
    QGAUSS = "q"
    FIBONOMIAL = "fib"
    PQ_WACHS_WHITE = "pq"
    FERMIONIC_F = "fermF"
    QFERMION = "qferm"
    HYPER_L = "hyperL"
    GAMMA_GL = "gammaGL"
    CUSTOM = "custom"


@dataclass(frozen=True)
class CapabilityFlags:
    distinct_nodes: bool
    invertible_factorials: bool
    numeric_convergent: bool


@dataclass(frozen=True)
class PsiSequence:
    """An admissible sequence, identified by kind and parameters.

    ``q`` is a numeric parameter for the q-dependent kinds (None means
    symbolic q), ``L`` the exponent of the hypergeometric kind and
    ``values`` the explicit n_psi list of a custom sequence.
    """

    kind: Kind
    q: Fraction | None = None
    L: int | None = None
    values: tuple | None = None

    @property
    def symbolic(self) -> bool:
        return self.kind in (Kind.QGAUSS, Kind.QFERMION, Kind.GAMMA_GL) and self.q is None or (
            self.kind is Kind.PQ_WACHS_WHITE
        )

    @property
    def scalar_tag(self) -> str:
        if self.kind is Kind.PQ_WACHS_WHITE:
            return "Q(p,q)"
        if self.kind is Kind.CUSTOM:
            return scalar_tag(self.values[0]) if self.values else "Q"
        return "Q(q)" if self.symbolic else "Q"

    @property
    def one(self):
        return one_like(self.value(0) if self.symbolic else Fraction(1))

    @property
    def zero(self):
        return zero_like(self.one)

    @property
    def horizon(self) -> int | None:
        """Largest n with a defined value (custom lists only)."""
        return len(self.values) - 1 if self.kind is Kind.CUSTOM else None

    def value(self, n: int):
        return psi_value(self, n)

    @cached_property
    def flags(self) -> CapabilityFlags:
        top = N_PROBE if self.horizon is None else min(N_PROBE, self.horizon)
        vals = [psi_value(self, n) for n in range(top + 1)]
        distinct = len(set(vals)) == len(vals)
        invertible = all(v != 0 for v in vals[1:])
        return CapabilityFlags(distinct, invertible, self._convergent(invertible))

    def _convergent(self, invertible: bool) -> bool:
        if not invertible or self.symbolic:
            return False
        if self.kind in (Kind.CLASSICAL, Kind.FIBONOMIAL, Kind.HYPER_L):
            return True
        if self.kind is Kind.QGAUSS:
            # n_q -> 1/(1-q) > 1 for 0 < q < 1; n_q grows geometrically for q >= 1 or q < -1
            return self.q > 0 or self.q < -1
        if self.kind is Kind.QFERMION:
            # n = [n]_{-q}
            return -self.q > 0 or -self.q < -1
        if self.kind is Kind.GAMMA_GL:
            return abs(self.q) > 1
        return False

    def __str__(self) -> str:
        return sequence_spec(self)


# --- constructors -------------------------------------------------------------

CLASSICAL = PsiSequence(Kind.CLASSICAL)
FIBONOMIAL = PsiSequence(Kind.FIBONOMIAL)
FERMIONIC_F = PsiSequence(Kind.FERMIONIC_F)
PQ_WACHS_WHITE = PsiSequence(Kind.PQ_WACHS_WHITE)


def q_gauss(q=None) -> PsiSequence:
    return PsiSequence(Kind.QGAUSS, q=None if q is None else Fraction(q))


def q_fermion(q=None) -> PsiSequence:
    return PsiSequence(Kind.QFERMION, q=None if q is None else Fraction(q))


def hyper_l(L: int) -> PsiSequence:
    if L < 1:
        raise ValueError("HyperL needs a positive integer L")
    return PsiSequence(Kind.HYPER_L, L=L)


def gamma_gl(q=None) -> PsiSequence:
    return PsiSequence(Kind.GAMMA_GL, q=None if q is None else Fraction(q))


def custom(values) -> PsiSequence:
    vals = tuple(as_exact(v) for v in values)
    if not vals:
        raise ValueError("custom sequence needs at least one value")
    if len({scalar_tag(v) for v in vals}) > 1:
        raise ValueError("custom values must share one scalar field")
    return PsiSequence(Kind.CUSTOM, values=vals)


Q_SYMBOLIC = q_gauss()


# --- values -------------------------------------------------------------------


def _fib(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def psi_value(seq: PsiSequence, n: int):
    """n_psi for the given sequence (0_psi = 0 throughout)."""
    if n < 0:
        raise IndexOutOfRange(f"negative index {n}")
    kind = seq.kind
    if kind is Kind.CUSTOM:
        if n >= len(seq.values):
            raise IndexOutOfRange(f"custom sequence defined only up to n={len(seq.values) - 1}")
        return seq.values[n]
    if kind is Kind.CLASSICAL:
        return Fraction(n)
    if kind is Kind.FIBONOMIAL:
        return Fraction(_fib(n))
    if kind is Kind.HYPER_L:
        return Fraction(n ** (seq.L + 1))
    if kind is Kind.FERMIONIC_F:
        return Fraction(n % 2)
    if kind is Kind.PQ_WACHS_WHITE:
        p, q = p_symbol(), lift_to_pq(q_symbol())
        if n == 0:
            return zero_like(p)
        # (p^n - q^n)/(p - q) = sum of p^i q^(n-1-i)
        return sum((p ** i * q ** (n - 1 - i) for i in range(n)), zero_like(p))
    q = q_symbol() if seq.q is None else seq.q
    if kind is Kind.QGAUSS:
        if n == 0:
            return zero_like(q)
        return as_exact(sum((q ** i for i in range(n)), zero_like(q)))
    if kind is Kind.QFERMION:
        # (1 - (-1)^n q^n)/(1 + q) = sum_{i<n} (-q)^i
        if n == 0:
            return zero_like(q)
        return as_exact(sum(((-q) ** i for i in range(n)), zero_like(q)))
    if kind is Kind.GAMMA_GL:
        # ratio of n_gamma! = prod_{i<n} (q^n - q^i) over (n-1)_gamma!, in closed form
        if n == 0:
            return zero_like(q)
        return as_exact(q ** (n - 1) * (q ** n - 1))
    raise ValueError(f"unknown sequence kind {kind}")


@lru_cache(maxsize=None)
def psi_factorial(seq: PsiSequence, n: int):
    """1_psi * 2_psi * ... * n_psi, with 0_psi! = 1."""
    if n < 0:
        raise IndexOutOfRange(f"negative index {n}")
    if seq.kind is Kind.GAMMA_GL:
        q = q_symbol() if seq.q is None else seq.q
        out = one_like(q)
        for i in range(n):
            out = out * (q ** n - q ** i)
        return out
    if n == 0:
        return seq.one
    return psi_factorial(seq, n - 1) * psi_value(seq, n)


def _require_invertible(seq: PsiSequence, upto: int) -> None:
    if not seq.flags.invertible_factorials:
        raise ZeroFactorial(f"{seq} has a vanishing psi-factorial")
    for m in range(1, upto + 1):
        if psi_value(seq, m) == 0:
            raise ZeroFactorial(f"{m}_psi = 0 for {seq}")


def psi_binomial(seq: PsiSequence, n: int, k: int):
    """n_psi! / (k_psi! (n-k)_psi!)."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"need 0 <= k <= n, got n={n}, k={k}")
    _require_invertible(seq, n)
    return psi_factorial(seq, n) / (psi_factorial(seq, k) * psi_factorial(seq, n - k))


def falling_node_poly(seq: PsiSequence, k: int) -> Poly:
    """x (x - 1_psi) (x - 2_psi) ... (x - (k-1)_psi)."""
    out = Poly((seq.one,))
    for j in range(k):
        out = out * Poly((-psi_value(seq, j), seq.one))
    return out


def rising_node_poly(seq: PsiSequence, k: int) -> Poly:
    """x (x + 1_psi) (x + 2_psi) ... (x + (k-1)_psi)."""
    out = Poly((seq.one,))
    for j in range(k):
        out = out * Poly((psi_value(seq, j), seq.one))
    return out


def psi_falling_power(seq: PsiSequence, N: int, k: int):
    """N_psi (N-1)_psi ... (N-k+1)_psi; zero once the factor 0_psi is reached."""
    if k > N:
        return seq.zero
    out = seq.one
    for j in range(k):
        out = out * psi_value(seq, N - j)
    return out


def psi_derivative(p: Poly, seq: PsiSequence) -> Poly:
    """Linear map y^n -> n_psi y^(n-1)."""
    return Poly([c * psi_value(seq, n) for n, c in enumerate(p.coeffs)][1:], p.var)


def exp_psi_series(seq: PsiSequence, order: int) -> TruncatedSeries:
    """Coefficients 1/n_psi! for n <= order."""
    _require_invertible(seq, order)
    return TruncatedSeries([1 / psi_factorial(seq, n) for n in range(order + 1)], order)


def nodes(seq: PsiSequence, k: int) -> list:
    """0, 1_psi, ..., k_psi; raises when the sequence repeats a node."""
    if not seq.flags.distinct_nodes:
        raise RepeatedNodes(f"{seq} has repeated nodes")
    return [psi_value(seq, j) for j in range(k + 1)]


def evaluate_sequence(seq: PsiSequence, q) -> PsiSequence:
    """The numeric counterpart of a symbolic q-kind sequence."""
    if seq.kind not in (Kind.QGAUSS, Kind.QFERMION, Kind.GAMMA_GL):
        raise ValueError(f"{seq} has no q parameter")
    return PsiSequence(seq.kind, q=Fraction(q))


# --- spec strings -------------------------------------------------------------


_SPEC = re.compile(r"^(?P<name>[A-Za-z]+)(?:(?P<sep>[=@])(?P<arg>.+))?$")


def parse_sequence(spec: str) -> PsiSequence:
    """Parse sequence spec strings such as "q=1/2", "hyperL=2", "gammaGL@q=2"
    or "custom:[0,1,1,2]"."""
    spec = spec.strip()
    if spec.startswith("custom:"):
        raw = json.loads(spec[len("custom:"):])
        return custom(Fraction(str(v)) for v in raw)
    m = _SPEC.match(spec)
    if not m:
        raise ValueError(f"bad sequence spec {spec!r}")
    name, arg = m.group("name"), m.group("arg")
    if name == "classical" and arg is None:
        return CLASSICAL
    if name == "fib" and arg is None:
        return FIBONOMIAL
    if name == "pq" and arg is None:
        return PQ_WACHS_WHITE
    if name == "fermF" and arg is None:
        return FERMIONIC_F
    if name == "q":
        return q_gauss(None if arg is None else Fraction(arg))
    if name == "qferm":
        return q_fermion(None if arg is None else Fraction(arg.removeprefix("q=")))
    if name == "hyperL" and arg is not None:
        return hyper_l(int(arg))
    if name == "gammaGL":
        if arg is None:
            return gamma_gl()
        return gamma_gl(Fraction(arg.removeprefix("q=")))
    raise ValueError(f"bad sequence spec {spec!r}")


def sequence_spec(seq: PsiSequence) -> str:
    k = seq.kind
    if k is Kind.CUSTOM:
        return "custom:[" + ",".join(str(v) for v in seq.values) + "]"
    if k is Kind.HYPER_L:
        return f"hyperL={seq.L}"
    if k is Kind.GAMMA_GL:
        return "gammaGL" if seq.q is None else f"gammaGL@q={seq.q}"
    if k in (Kind.QGAUSS, Kind.QFERMION):
        return k.value if seq.q is None else f"{k.value}={seq.q}"
    return k.value
