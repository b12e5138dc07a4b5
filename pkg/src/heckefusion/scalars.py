"""Exact scalars: Laurent polynomials and rational functions in q, and the
one-parameter extension by ε used to take fusion limits.

A rational function is stored as ``q^e * n(q) / d(q)`` where ``n`` and ``d``
are ordinary polynomials over ℚ with nonzero constant terms, ``d`` is monic
and ``gcd(n, d) = 1``.  This representative is unique, so equality is a
structural comparison.  Polynomial arithmetic and gcds are delegated to
FLINT's ``fmpq_poly``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from flint import fmpq, fmpq_poly

__all__ = [
    "LaurentPolynomial",
    "RationalFunction",
    "EpsilonFunction",
    "NotRegularError",
    "PoleError",
    "rf",
    "qpow",
    "bar_involution",
    "eval_eps_zero",
    "specialize_q",
    "rf_arith",
    "parse_rf",
]

_ONE_POLY = fmpq_poly([1])
_ZERO_POLY = fmpq_poly([])


class NotRegularError(ArithmeticError):
    """Raised when an ε-function has a pole at ε = 0."""


class PoleError(ArithmeticError):
    """Raised when specializing q hits a pole."""


def _valuation(p: fmpq_poly) -> int:
    for i, c in enumerate(p.coeffs()):
        if c != 0:
            return i
    raise ValueError("valuation of zero polynomial")


def _strip(p: fmpq_poly) -> tuple[int, fmpq_poly]:
    """Split ``p = q^v * p'`` with ``p'(0) != 0``."""
    if p[0] != 0:
        return 0, p
    v = _valuation(p)
    return v, p.right_shift(v)


def _to_fraction(c: fmpq) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _to_fmpq(c) -> fmpq:
    if isinstance(c, fmpq):
        return c
    c = Fraction(c)
    return fmpq(c.numerator, c.denominator)


def _reverse(p: fmpq_poly) -> fmpq_poly:
    return fmpq_poly(list(reversed(p.coeffs())))


class LaurentPolynomial:
    """Finite sum of rational multiples of powers of q (negative powers allowed).

    >>> LaurentPolynomial({-1: -1, 1: 1}).terms
    {-1: Fraction(-1, 1), 1: Fraction(1, 1)}
    """

    __slots__ = ("_e", "_p")

    def __init__(self, terms: Mapping[int, object] | None = None):
        terms = {k: Fraction(v) for k, v in (terms or {}).items() if Fraction(v) != 0}
        if not terms:
            self._e, self._p = 0, _ZERO_POLY
            return
        lo, hi = min(terms), max(terms)
        self._e = lo
        self._p = fmpq_poly([_to_fmpq(terms.get(k, 0)) for k in range(lo, hi + 1)])

    @classmethod
    def _raw(cls, e: int, p: fmpq_poly) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        if p.is_zero():
            obj._e, obj._p = 0, _ZERO_POLY
        else:
            v, p = _strip(p)
            obj._e, obj._p = e + v, p
        return obj

    @property
    def terms(self) -> dict[int, Fraction]:
        return {self._e + i: _to_fraction(c) for i, c in enumerate(self._p.coeffs()) if c != 0}

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def min_exponent(self) -> int:
        return self._e

    def max_exponent(self) -> int:
        return self._e + max(self._p.degree(), 0)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._e == other._e and self._p == other._p

    def __hash__(self):
        return hash((self._e, tuple(self._p.coeffs())))

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        e = min(self._e, other._e)
        a = self._p.left_shift(self._e - e) if self._e > e else self._p
        b = other._p.left_shift(other._e - e) if other._e > e else other._p
        return LaurentPolynomial._raw(e, a + b)

    def __neg__(self):
        return LaurentPolynomial._raw(self._e, -self._p)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return LaurentPolynomial._raw(self._e + other._e, self._p * other._p)

    def to_text(self) -> str:
        items = sorted(self.terms.items())
        if not items:
            return "0"
        return " + ".join(f"{c}*q^{k}" for k, c in items)

    def __repr__(self):
        return f"LaurentPolynomial({self.to_text()})"


def _make(e: int, n: fmpq_poly, d: fmpq_poly) -> "RationalFunction":
    """Normalize ``q^e n/d`` into canonical form."""
    if n.is_zero():
        return RationalFunction.ZERO
    if d.is_zero():
        raise ZeroDivisionError("zero denominator")
    if n[0] == 0:
        v, n = _strip(n)
        e += v
    if d[0] == 0:
        v, d = _strip(d)
        e -= v
    if not d.is_one():
        if d.degree() > 0:
            g = n.gcd(d)
            if not g.is_one():
                n = n // g
                d = d // g
        lc = d.leading_coefficient()
        if lc != 1:
            n = n / lc
            d = d / lc
    return RationalFunction._raw(e, n, d)


class RationalFunction:
    """Exact element of ℚ(q) in canonical reduced form.

    >>> q = qpow(1)
    >>> (q - q.inv()) / (q * q - 1)
    q^-1
    """

    __slots__ = ("_e", "_n", "_d", "_h")

    ZERO: "RationalFunction"
    ONE: "RationalFunction"

    def __init__(self, numerator: LaurentPolynomial | None = None,
                 denominator: LaurentPolynomial | None = None):
        num = numerator if numerator is not None else LaurentPolynomial()
        den = denominator if denominator is not None else LaurentPolynomial({0: 1})
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        r = _make(num._e - den._e, num._p, den._p)
        self._e, self._n, self._d, self._h = r._e, r._n, r._d, None

    @classmethod
    def _raw(cls, e, n, d) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj._e, obj._n, obj._d, obj._h = e, n, d, None
        return obj

    @classmethod
    def const(cls, c) -> "RationalFunction":
        c = _to_fmpq(c)
        if c == 0:
            return cls.ZERO
        return cls._raw(0, fmpq_poly([c]), _ONE_POLY)

    @classmethod
    def q_power(cls, k: int, coeff=1) -> "RationalFunction":
        c = _to_fmpq(coeff)
        if c == 0:
            return cls.ZERO
        return cls._raw(k, fmpq_poly([c]), _ONE_POLY)

    @property
    def numerator(self) -> LaurentPolynomial:
        return LaurentPolynomial._raw(self._e, self._n)

    @property
    def denominator(self) -> LaurentPolynomial:
        return LaurentPolynomial._raw(0, self._d)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_laurent(self) -> bool:
        return self._d.is_one()

    def __bool__(self):
        return not self._n.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            if isinstance(other, (int, Fraction)):
                other = RationalFunction.const(other)
            else:
                return NotImplemented
        return self._e == other._e and self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._h is None:
            self._h = hash((self._e, tuple(self._n.coeffs()), tuple(self._d.coeffs())))
        return self._h

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        if self._n.is_zero():
            return other
        if other._n.is_zero():
            return self
        e1, e2 = self._e, other._e
        e = e1 if e1 < e2 else e2
        n1 = self._n.left_shift(e1 - e) if e1 > e else self._n
        n2 = other._n.left_shift(e2 - e) if e2 > e else other._n
        d1, d2 = self._d, other._d
        if d1.is_one() and d2.is_one():
            n = n1 + n2
            if n.is_zero():
                return RationalFunction.ZERO
            if n[0] == 0:
                v, n = _strip(n)
                e += v
            return RationalFunction._raw(e, n, _ONE_POLY)
        if d1 == d2:
            return _make(e, n1 + n2, d1)
        if d1.is_one():
            return _make(e, n1 * d2 + n2, d2)
        if d2.is_one():
            return _make(e, n1 + n2 * d1, d1)
        g = d1.gcd(d2)
        if g.is_one():
            return _make(e, n1 * d2 + n2 * d1, d1 * d2)
        d1g, d2g = d1 // g, d2 // g
        return _make(e, n1 * d2g + n2 * d1g, d1 * d2g)

    __radd__ = __add__

    def __neg__(self):
        if self._n.is_zero():
            return self
        return RationalFunction._raw(self._e, -self._n, self._d)

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        if self._n.is_zero() or other._n.is_zero():
            return RationalFunction.ZERO
        e = self._e + other._e
        d1, d2 = self._d, other._d
        if d1.is_one() and d2.is_one():
            return RationalFunction._raw(e, self._n * other._n, _ONE_POLY)
        n1, n2 = self._n, other._n
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 // g, d2 // g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 // g, d1 // g
        d = d1 * d2
        n = n1 * n2
        lc = d.leading_coefficient()
        if lc != 1:
            n, d = n / lc, d / lc
        return RationalFunction._raw(e, n, d)

    __rmul__ = __mul__

    def inv(self) -> "RationalFunction":
        if self._n.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        n, d = self._d, self._n
        lc = d.leading_coefficient()
        if lc != 1:
            n, d = n / lc, d / lc
        return RationalFunction._raw(-self._e, n, d)

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            other = _coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = RationalFunction.ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # involution and evaluation -------------------------------------------
    def bar(self) -> "RationalFunction":
        if self._n.is_zero():
            return self
        e = -self._e - self._n.degree() + self._d.degree()
        return _make(e, _reverse(self._n), _reverse(self._d))

    def at(self, q0) -> Fraction:
        q0 = _to_fmpq(q0)
        dv = self._d(q0)
        if dv == 0 or (q0 == 0 and self._e < 0):
            raise PoleError(f"pole at q={q0}")
        val = self._n(q0) / dv
        if self._e:
            val = val * q0 ** self._e
        return _to_fraction(val)

    def degree_bound(self) -> int:
        """Largest |exponent| appearing in numerator or denominator."""
        lo = self._e
        hi = self._e + max(self._n.degree(), 0)
        return max(abs(lo), abs(hi), self._d.degree())

    # serialization --------------------------------------------------------
    def to_text(self) -> str:
        return f"{self.numerator.to_text()} / {self.denominator.to_text()}"

    def to_json(self) -> dict:
        def enc(lp: LaurentPolynomial):
            return [[k, f"{c.numerator}/{c.denominator}"] for k, c in sorted(lp.terms.items())]
        return {"num": enc(self.numerator), "den": enc(self.denominator)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "RationalFunction":
        def dec(items):
            return LaurentPolynomial({int(k): Fraction(c) for k, c in items})
        return cls(dec(obj["num"]), dec(obj["den"]))

    def __str__(self):
        num = _pretty_laurent(self.numerator)
        if self._d.is_one():
            return num
        den = _pretty_laurent(self.denominator)
        if len(self.numerator.terms) > 1:
            num = f"({num})"
        return f"{num}/({den})"

    def __repr__(self):
        return str(self)


def _pretty_laurent(lp: LaurentPolynomial) -> str:
    items = sorted(lp.terms.items())
    if not items:
        return "0"
    parts = []
    for k, c in items:
        mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


RationalFunction.ZERO = RationalFunction._raw(0, _ZERO_POLY, _ONE_POLY)
RationalFunction.ONE = RationalFunction._raw(0, _ONE_POLY, _ONE_POLY)


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, fmpq)):
        return RationalFunction.const(x)
    return NotImplemented


def rf(x) -> RationalFunction:
    """Coerce an int, Fraction, string or RationalFunction into ℚ(q)."""
    if isinstance(x, str):
        return parse_rf(x)
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")
    return out


def qpow(k: int, coeff=1) -> RationalFunction:
    """The monomial ``coeff * q^k``."""
    return RationalFunction.q_power(k, coeff)


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def bar_involution(a: RationalFunction) -> RationalFunction:
    return a.bar()


def specialize_q(a: RationalFunction, q0) -> Fraction:
    return a.at(q0)


_TERM = re.compile(r"\s*([+-])?\s*([0-9]+(?:/[0-9]+)?)?\s*\*?\s*(q(?:\s*\^\s*\(?\s*(-?[0-9]+)\s*\)?)?)?\s*")


def _parse_laurent(text: str) -> LaurentPolynomial:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    terms: dict[int, Fraction] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) is not None else 1
        else:
            exp = 0
        terms[exp] = terms.get(exp, Fraction(0)) + sign * coeff
        pos = m.end()
    return LaurentPolynomial(terms)


def parse_rf(text: str) -> RationalFunction:
    """Parse ``"5"``, ``"1/2"``, ``"q^2 - 1"`` or ``"num / den"`` forms.

    A single ``/`` between two integers is read as a rational constant.

    >>> parse_rf("1*q^-1 + 1*q^1 / 1*q^0")
    q^-1 + q
    >>> parse_rf("3/4")
    3/4
    """
    text = text.strip()
    if re.fullmatch(r"[+-]?[0-9]+/[0-9]+", text):
        return RationalFunction.const(Fraction(text))
    if " / " in text:
        num, den = text.split(" / ", 1)
        return RationalFunction(_parse_laurent(num), _parse_laurent(den))
    if ")/(" in text.replace(" ", ""):
        compact = text.replace(" ", "")
        num, den = compact.split(")/(", 1)
        return RationalFunction(_parse_laurent(num + ")"), _parse_laurent("(" + den))
    return RationalFunction(_parse_laurent(text))


# ---------------------------------------------------------------------------
# ℚ(q)(ε): polynomials in ε are tuples of RationalFunction, index = power.

_EPoly = tuple


def _ptrim(p) -> _EPoly:
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return tuple(p)


def _padd(a, b) -> _EPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _ptrim(out)


def _pscale(a, c: RationalFunction) -> _EPoly:
    if c.is_zero():
        return ()
    return tuple(x * c for x in a)


def _pmul(a, b) -> _EPoly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return _pscale(b, a[0])
    if len(b) == 1:
        return _pscale(a, b[0])
    out = [RationalFunction.ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return _ptrim(out)


def _pdivmod(a, b) -> tuple[_EPoly, _EPoly]:
    if not b:
        raise ZeroDivisionError("division by zero ε-polynomial")
    a = list(a)
    lead_inv = b[-1].inv()
    quot = [RationalFunction.ZERO] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * lead_inv
        shift = len(a) - len(b)
        quot[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = a[shift + i] - c * y
        a = list(_ptrim(a))
    return _ptrim(quot), tuple(a)


def _pmonic(a) -> _EPoly:
    inv = a[-1].inv()
    return tuple(x * inv for x in a)


def _pgcd(a, b) -> _EPoly:
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    return _pmonic(a) if a else ()


class EpsilonFunction:
    """Exact element of ℚ(q)(ε): a reduced fraction of polynomials in ε.

    >>> eps = EpsilonFunction.epsilon()
    >>> eval_eps_zero((eps * 3) / (eps * 3))
    1
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Iterable = (), den: Iterable | None = None):
        num = _ptrim(_coerce_rf_seq(num))
        den = _ptrim(_coerce_rf_seq(den)) if den is not None else (RationalFunction.ONE,)
        if not den:
            raise ZeroDivisionError("zero ε-denominator")
        self.num, self.den = self._normalize(num, den)

    @staticmethod
    def _normalize(num, den):
        if not num:
            return (), (RationalFunction.ONE,)
        if len(den) == 1:
            if den[0] == RationalFunction.ONE:
                return num, den
            return _pscale(num, den[0].inv()), (RationalFunction.ONE,)
        g = _pgcd(num, den)
        if len(g) > 1:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
        inv = den[-1].inv()
        return _pscale(num, inv), _pscale(den, inv)

    @classmethod
    def _raw(cls, num, den) -> "EpsilonFunction":
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def polynomial(cls, coeffs: Iterable) -> "EpsilonFunction":
        return cls._raw(_ptrim(_coerce_rf_seq(coeffs)), (RationalFunction.ONE,))

    @classmethod
    def epsilon(cls) -> "EpsilonFunction":
        return cls._raw((RationalFunction.ZERO, RationalFunction.ONE), (RationalFunction.ONE,))

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _coerce_eps(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _coerce_eps(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.is_polynomial() and other.is_polynomial():
            return EpsilonFunction._raw(_padd(self.num, other.num), (RationalFunction.ONE,))
        if self.den == other.den:
            return EpsilonFunction(_padd(self.num, other.num), self.den)
        return EpsilonFunction(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return EpsilonFunction._raw(tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = _coerce_eps(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_eps(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            if self.is_polynomial():
                return EpsilonFunction._raw(_pscale(self.num, other), self.den)
            other = EpsilonFunction._raw((other,) if other else (), (RationalFunction.ONE,))
        other = _coerce_eps(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_polynomial() and other.is_polynomial():
            return EpsilonFunction._raw(_pmul(self.num, other.num), (RationalFunction.ONE,))
        return EpsilonFunction(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inv(self) -> "EpsilonFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero ε-function")
        return EpsilonFunction(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce_eps(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce_eps(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def eval_zero(self) -> RationalFunction:
        if self.den[0].is_zero():
            raise NotRegularError("not regular at ε = 0")
        if not self.num:
            return RationalFunction.ZERO
        return self.num[0] / self.den[0]

    def __repr__(self):
        def show(p):
            return " + ".join(f"({c})*ε^{i}" for i, c in enumerate(p) if c) or "0"
        if self.is_polynomial():
            return f"EpsilonFunction({show(self.num)})"
        return f"EpsilonFunction(({show(self.num)}) / ({show(self.den)}))"


def _coerce_rf_seq(seq) -> list:
    return [rf(c) if not isinstance(c, RationalFunction) else c for c in seq]


def _coerce_eps(x):
    if isinstance(x, EpsilonFunction):
        return x
    if isinstance(x, RationalFunction):
        return EpsilonFunction._raw((x,) if x else (), (RationalFunction.ONE,))
    if isinstance(x, (int, Fraction)):
        c = RationalFunction.const(x)
        return EpsilonFunction._raw((c,) if c else (), (RationalFunction.ONE,))
    return NotImplemented


def eval_eps_zero(a: EpsilonFunction) -> RationalFunction:
    """Value at ε = 0 of a reduced ε-function; raises NotRegularError at a pole."""
    if isinstance(a, RationalFunction):
        return a
    return a.eval_zero()
