"""Exact scalars: rationals, rational functions in q and in (p, q), dense
polynomials and truncated power series.

Rationals are plain :class:`fractions.Fraction` values (``int`` is accepted
wherever a rational is).  Rational functions are kept in canonical form
(coprime numerator and monic denominator), so equality is structural.
The two-variable field Q(p, q) is realised recursively as rational
functions in ``p`` whose coefficients live in Q(q).
"""

from __future__ import annotations

import ast
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

from .errors import (
    DivisionByZero,
    NonInvertibleConstantTerm,
    NonzeroConstantTerm,
    RepeatedNodes,
    TagMismatch,
)

RATIONAL = "Q"


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def _div(a, b):
    if b == 0:
        raise DivisionByZero("division by zero")
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    if isinstance(b, int):
        b = Fraction(b)
    return a / b


def _fmt_coeff(c) -> str:
    if _is_rational(c):
        return str(c)
    return f"({c})"


class Poly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``var**i``.

    Coefficients may be rationals, :class:`RatFunc` values, or (for ring
    computations such as Z[q][x]) other polynomials.  Polynomials in
    different variables never mix implicitly; use :meth:`scale` to multiply
    by a coefficient that is itself a polynomial.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self.var = var

    @classmethod
    def monomial(cls, n: int, var: str = "x", coeff=1) -> "Poly":
        return cls([0] * n + [coeff], var)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1]

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.var != self.var:
                raise TagMismatch(f"polynomials in {self.var} and {other.var}")
            return other
        if isinstance(other, RatFunc) and other.var == self.var:
            raise TagMismatch("cannot mix Poly and RatFunc in the same variable")
        return Poly((other,), self.var)

    def __add__(self, other):
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly((), self.var)
        if len(b) == 1:
            return self.scale(b[0])
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(out, self.var)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        """Multiply every coefficient by ``c`` (no coercion of ``c``)."""
        return Poly([a * c for a in self.coeffs], self.var)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly((1,), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, m: int) -> "Poly":
        """Multiply by var**m (m >= 0) or divide by var**(-m) (exact)."""
        if m >= 0:
            return Poly([0] * m + list(self.coeffs), self.var)
        return Poly(self.coeffs[-m:], self.var)

    def __divmod__(self, other):
        o = self._coerce(other)
        if not o:
            raise DivisionByZero("polynomial division by zero")
        r = list(self.coeffs)
        dq = o.degree
        lc = o.lc
        if len(r) <= dq:
            return Poly((), self.var), self
        quo = [0] * (len(r) - dq)
        for i in range(len(r) - 1 - dq, -1, -1):
            c = _div(r[i + dq], lc)
            if c == 0:
                continue
            quo[i] = c
            for j, oj in enumerate(o.coeffs):
                r[i + j] = r[i + j] - c * oj
        return Poly(quo, self.var), Poly(r[:dq], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs or self.lc == 1:
            return self
        lc = self.lc
        return Poly([_div(c, lc) for c in self.coeffs], self.var)

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, RatFunc):
            return False
        if self.degree <= 0:
            return (self.coeffs[0] if self.coeffs else 0) == other
        return False

    def __hash__(self):
        if self.degree <= 0:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, {self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if not mono:
                terms.append(_fmt_coeff(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{_fmt_coeff(c)}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


# --- gcd over Q[x] -----------------------------------------------------------


def _primitive_ints(coeffs: Sequence) -> list[int]:
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_divides(d: list[int], f: list[int]) -> bool:
    r = list(f)
    dd = len(d) - 1
    lc = d[-1]
    for i in range(len(r) - 1 - dd, -1, -1):
        c, rem = divmod(r[i + dd], lc)
        if rem:
            return False
        if c:
            for j, dj in enumerate(d):
                r[i + j] -= c * dj
    return not any(r[:dd])


def _heugcd(f: list[int], g: list[int]) -> list[int] | None:
    """Heuristic gcd of primitive integer polynomials (evaluate, take the
    integer gcd, reconstruct in the symmetric base-xi representation)."""
    fn = max(abs(c) for c in f)
    gn = max(abs(c) for c in g)
    b = 2 * min(fn, gn) + 29
    xi = max(min(b, 99 * isqrt(b)), 2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(6):
        fv = gv = 0
        for c in reversed(f):
            fv = fv * xi + c
        for c in reversed(g):
            gv = gv * xi + c
        if fv and gv:
            h = gcd(fv, gv)
            cand = []
            half = xi // 2
            while h:
                c = h % xi
                if c > half:
                    c -= xi
                cand.append(c)
                h = (h - c) // xi
            if cand:
                cont = 0
                for c in cand:
                    cont = gcd(cont, c)
                cand = [c // cont for c in cand]
                if cand[-1] < 0:
                    cand = [-c for c in cand]
                if _int_divides(cand, f) and _int_divides(cand, g):
                    return cand
        xi = xi * 73794 * isqrt(isqrt(xi)) // 27011
    return None


def _euclid_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd of two polynomials over a field."""
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    if a.var != b.var:
        raise TagMismatch("gcd of polynomials in different variables")
    if not all(_is_rational(c) for c in a.coeffs + b.coeffs):
        return _euclid_gcd(a, b)
    va, vb = a.valuation(), b.valuation()
    s = min(va, vb)
    a, b = a.shift(-va), b.shift(-vb)
    if a.degree == 0 or b.degree == 0:
        return Poly.monomial(s, a.var)
    h = _heugcd(_primitive_ints(a.coeffs), _primitive_ints(b.coeffs))
    g = Poly(h, a.var).monic() if h is not None else _euclid_gcd(a, b)
    return g.shift(s)


# --- rational functions ------------------------------------------------------


class RatFunc:
    """Canonical rational function ``num/den`` in one variable.

    ``base`` names the coefficient field: ``"Q"`` for Q(var), ``"Q(q)"``
    for the recursive Q(q)(p) = Q(p, q).
    """

    __slots__ = ("num", "den", "base")

    def __init__(self, num: Poly, den: Poly | None = None, base: str = RATIONAL, *, _reduced: bool = False):
        if den is None:
            den = Poly((1,), num.var)
            _reduced = True
        if num.var != den.var:
            raise TagMismatch("numerator and denominator in different variables")
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        elif den.degree == 0 and den.coeffs[0] != 1:
            num, den = num.scale(_div(1, den.coeffs[0])), Poly((1,), num.var)
        self.num = num
        self.den = den
        self.base = base

    @classmethod
    def const(cls, c, var: str = "q", base: str = RATIONAL) -> "RatFunc":
        return cls(Poly((c,), var), base=base)

    @classmethod
    def symbol(cls, var: str = "q", base: str = RATIONAL) -> "RatFunc":
        one = 1 if base == RATIONAL else RatFunc.const(1, _base_var(base))
        return cls(Poly((0, one), var), base=base)

    @property
    def var(self) -> str:
        return self.num.var

    @property
    def tag(self) -> str:
        if self.base == RATIONAL:
            return f"Q({self.var})"
        return f"Q({self.var},{_base_var(self.base)})"

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.var != self.var or other.base != self.base:
                raise TagMismatch(f"{self.tag} vs {other.tag}")
            return other
        if isinstance(other, Poly):
            return NotImplemented
        if _is_rational(other):
            return RatFunc(Poly((other,), self.var), base=self.base, _reduced=True)
        raise TagMismatch(f"cannot combine {self.tag} with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            num = self.num + o.num
            return RatFunc(num, self.den, self.base, _reduced=self.den.degree == 0)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den, self.base)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.base, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den.degree == 0 and o.den.degree == 0:
            return RatFunc(self.num * o.num, self.den, self.base, _reduced=True)
        return RatFunc(self.num * o.num, self.den * o.den, self.base)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise DivisionByZero("inverse of zero rational function")
        lc = self.num.lc
        num = self.den.scale(_div(1, lc))
        den = self.num.scale(_div(1, lc))
        return RatFunc(num, den, self.base, _reduced=True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, self.base, _reduced=True)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return (
                self.var == other.var
                and self.base == other.base
                and self.num == other.num
                and self.den == other.den
            )
        if _is_rational(other):
            return self.den.degree == 0 and self.num == other
        return False

    def __hash__(self):
        if self.den.degree == 0 and self.num.degree <= 0:
            return hash(self.num.coeffs[0] if self.num.coeffs else 0)
        return hash((self.var, self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return bool(self.num)

    def evaluate(self, value):
        """Substitute ``value`` for the variable."""
        dv = self.den(value)
        if dv == 0:
            raise DivisionByZero(f"denominator vanishes at {self.var}={value}")
        out = _div(self.num(value), dv)
        return Fraction(out) if isinstance(out, int) else out

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _base_var(base: str) -> str:
    return base[2:-1]


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    var = num.var
    if not num:
        return Poly((), var), Poly((1,), var)
    if den.degree == 0:
        c = den.coeffs[0]
        if c != 1:
            num = num.scale(_div(1, c))
        return num, Poly((1,), var)
    if den.valuation() == den.degree:
        # monomial denominator: only powers of var can cancel
        s = min(den.degree, num.valuation())
        num = num.shift(-s)
        den = den.shift(-s)
    else:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
    lc = den.lc
    if lc != 1:
        inv = _div(1, lc)
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def q_symbol() -> RatFunc:
    """The indeterminate q as an element of Q(q)."""
    return RatFunc.symbol("q")


def p_symbol() -> RatFunc:
    """The indeterminate p as an element of Q(p, q)."""
    return RatFunc.symbol("p", base="Q(q)")


def lift_to_pq(x) -> RatFunc:
    """Embed a rational or an element of Q(q) into Q(p, q)."""
    if isinstance(x, RatFunc):
        if x.tag != "Q(q)":
            raise TagMismatch(f"cannot lift {x.tag} into Q(p,q)")
    elif not _is_rational(x):
        raise TagMismatch(f"cannot lift {type(x).__name__} into Q(p,q)")
    return RatFunc(Poly((x,), "p"), base="Q(q)", _reduced=True)


# --- scalar helpers ----------------------------------------------------------


def scalar_tag(x) -> str:
    if _is_rational(x):
        return RATIONAL
    if isinstance(x, RatFunc):
        return x.tag
    raise TypeError(f"not an exact scalar: {x!r}")


def zero_like(x):
    if isinstance(x, RatFunc):
        return RatFunc(Poly((), x.var), base=x.base, _reduced=True)
    return Fraction(0)


def one_like(x):
    if isinstance(x, RatFunc):
        return RatFunc(Poly((1,), x.var), base=x.base, _reduced=True)
    return Fraction(1)


def as_exact(x):
    """Normalise ints to Fractions; exact scalars pass through."""
    if isinstance(x, bool):
        raise TypeError("bool is not an exact scalar")
    if isinstance(x, int):
        return Fraction(x)
    return x


def scalar_arith(a, b, op: str):
    """Exact field operation ``op`` in {add, sub, mul, div} on same-tag scalars."""
    a, b = as_exact(a), as_exact(b)
    ta, tb = scalar_tag(a), scalar_tag(b)
    if ta != tb:
        raise TagMismatch(f"{ta} vs {tb}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def evaluate_scalar(x, value):
    """Substitute ``value`` into a symbolic scalar; rationals pass through."""
    if isinstance(x, RatFunc):
        return x.evaluate(value)
    return as_exact(x)


# --- truncated power series --------------------------------------------------


def _series_tag(coeffs) -> str:
    for c in coeffs:
        if isinstance(c, RatFunc):
            return c.tag
    return RATIONAL


class TruncatedSeries:
    """Power series known exactly up to and including x**order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = list(coeffs)
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("series order must be non-negative")
        sample = next((x for x in c if isinstance(x, RatFunc)), None)
        zero = zero_like(sample) if sample is not None else Fraction(0)
        c = [as_exact(x) for x in c[: order + 1]]
        c += [zero] * (order + 1 - len(c))
        self.coeffs = tuple(c)
        self.order = order

    @property
    def tag(self) -> str:
        return _series_tag(self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other: "TruncatedSeries"):
        if self.tag != other.tag:
            raise TagMismatch(f"series over {self.tag} and {other.tag}")

    def __add__(self, other: "TruncatedSeries"):
        self._check(other)
        m = min(self.order, other.order)
        return TruncatedSeries([self[i] + other[i] for i in range(m + 1)], m)

    def __sub__(self, other: "TruncatedSeries"):
        self._check(other)
        m = min(self.order, other.order)
        return TruncatedSeries([self[i] - other[i] for i in range(m + 1)], m)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries([c * other for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot raise the order of a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def scale_argument(self, c) -> "TruncatedSeries":
        """f(x) -> f(c x)."""
        out = []
        power = one_like(c)
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return TruncatedSeries(out, self.order)

    def shift_up(self) -> "TruncatedSeries":
        """Multiply by x; the result is known one order further."""
        return TruncatedSeries([zero_like(self.coeffs[0])] + list(self.coeffs), self.order + 1)

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    m = min(a.order, b.order)
    out = []
    for n in range(m + 1):
        s = a[0] * b[n]
        for k in range(1, n + 1):
            s = s + a[k] * b[n - k]
        out.append(s)
    return TruncatedSeries(out, m)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a[0]
    if a0 == 0:
        raise NonInvertibleConstantTerm("constant term is zero")
    inv0 = _div(1, a0)
    b = [inv0]
    for n in range(1, a.order + 1):
        s = a[1] * b[n - 1]
        for k in range(2, n + 1):
            s = s + a[k] * b[n - k]
        b.append(-s * inv0)
    return TruncatedSeries(b, a.order)


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp of a series with zero constant term, via n b_n = sum k a_k b_{n-k}."""
    if a[0] != 0:
        raise NonzeroConstantTerm("exp needs a zero constant term")
    sample = next((c for c in a.coeffs if isinstance(c, RatFunc)), None)
    b = [one_like(sample) if sample is not None else Fraction(1)]
    for n in range(1, a.order + 1):
        s = a[1] * b[n - 1]
        for k in range(2, n + 1):
            s = s + k * a[k] * b[n - k]
        b.append(s / n)
    return TruncatedSeries(b, a.order)


# --- divided differences -----------------------------------------------------


def _check_nodes(nodes: list) -> None:
    tags = {scalar_tag(x) for x in nodes}
    if len(tags) > 1:
        raise TagMismatch(f"nodes from several fields: {sorted(tags)}")
    seen = set()
    for x in nodes:
        if x in seen:
            raise RepeatedNodes(f"node {x} appears more than once")
        seen.add(x)


def _value_at(f: Poly, x):
    v = f(x)
    if isinstance(v, RatFunc) or isinstance(x, Fraction):
        return as_exact(v)
    if isinstance(x, RatFunc):
        return RatFunc(Poly((v,), x.var), base=x.base, _reduced=True)
    return as_exact(v)


def newton_top_row(nodes: Sequence, f: Poly) -> list:
    """[x_0; f], [x_0, x_1; f], ..., [x_0..x_K; f] from one Newton table.

    Uses ([x_0..x_{k-1}] - [x_1..x_k]) / (x_0 - x_k) level by level.
    """
    nodes = [as_exact(x) for x in nodes]
    _check_nodes(nodes)
    vals = [_value_at(f, x) for x in nodes]
    top = [vals[0]]
    for j in range(1, len(nodes)):
        vals = [(vals[i] - vals[i + 1]) / (nodes[i] - nodes[i + j]) for i in range(len(vals) - 1)]
        top.append(vals[0])
    return top


def divided_difference(nodes: Sequence, f: Poly):
    """[x_0, ..., x_k; f] for pairwise distinct nodes."""
    nodes = [as_exact(x) for x in nodes]
    if not nodes:
        raise ValueError("need at least one node")
    _check_nodes(nodes)
    for c in f.coeffs:
        if isinstance(c, RatFunc) and c.tag != scalar_tag(nodes[0]):
            raise TagMismatch(f"polynomial over {c.tag}, nodes over {scalar_tag(nodes[0])}")
    if len(nodes) - 1 > f.degree:
        return zero_like(nodes[0])
    return newton_top_row(nodes, f)[-1]


# --- serialization -----------------------------------------------------------


def to_json(x):
    """Exact scalars: "p/q" strings; polynomials: coefficient arrays;
    rational functions: {"num": [...], "den": [...]}."""
    if isinstance(x, bool):
        raise TypeError("bool is not serializable as an exact scalar")
    if _is_rational(x):
        return str(x)
    if isinstance(x, RatFunc):
        if x.base != RATIONAL:
            lift = lambda c: c if isinstance(c, RatFunc) else RatFunc.const(c, _base_var(x.base))
            return {
                "num": [to_json(lift(c)) for c in x.num.coeffs],
                "den": [to_json(lift(c)) for c in x.den.coeffs],
            }
        return {"num": to_json(x.num), "den": to_json(x.den)}
    if isinstance(x, Poly):
        return [to_json(c) for c in x.coeffs]
    if isinstance(x, TruncatedSeries):
        return {"order": x.order, "coefficients": [to_json(c) for c in x.coeffs]}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def rational_from_json(s: str) -> Fraction:
    return Fraction(s)


def poly_from_json(items: list, var: str = "x") -> Poly:
    return Poly([Fraction(s) for s in items], var)


def ratfunc_from_json(obj: dict, var: str = "q") -> RatFunc:
    return RatFunc(poly_from_json(obj["num"], var), poly_from_json(obj["den"], var))


# --- parsing -----------------------------------------------------------------


def parse_polynomial(text: str, var: str = "x") -> Poly:
    """Parse an expression such as ``"3/2*x^2 - x + 1"`` or ``"x*(x-1)"``."""
    tree = ast.parse(text.replace("^", "**"), mode="eval")
    xpoly = Poly((0, 1), var)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Poly((node.value,), var)
        if isinstance(node, ast.Name) and node.id == var:
            return xpoly
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if right.degree > 0 or not right:
                    raise ValueError("can only divide by a nonzero constant")
                return left.scale(Fraction(1) / right.coeffs[0])
            if isinstance(node.op, ast.Pow):
                if right.degree > 0 or not isinstance(right[0], int) or right[0] < 0:
                    raise ValueError("exponent must be a non-negative integer")
                return left ** int(right[0])
        raise ValueError(f"unsupported syntax in polynomial {text!r}")

    p = ev(tree)
    return Poly([as_exact(c) for c in p.coeffs], var)
