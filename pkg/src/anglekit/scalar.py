"""Exact elements a + b*sqrt(d) of a real quadratic field.

Signs are decided with rational arithmetic only, so every predicate built on
top of :class:`Scalar` is exact.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

from .errors import BadParameter, IncompatibleFields

ScalarLike = Union["Scalar", int, Fraction]


@lru_cache(maxsize=None)
def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Return ``(m, f)`` with ``n == m*m*f`` and ``f`` square-free."""
    if n < 0:
        raise BadParameter(f"cannot take sqrt of negative integer {n}")
    if n in (0, 1):
        return 1, n
    m, f = 1, n
    p = 2
    while p * p <= f:
        while f % (p * p) == 0:
            f //= p * p
            m *= p
        p += 1 if p == 2 else 2
    return m, f


def is_squarefree(d: int) -> bool:
    return d >= 0 and squarefree_decomposition(d)[0] == 1


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"not a rational: {v!r}")


@dataclass(frozen=True, slots=True)
class Scalar:
    """``a + b*sqrt(d)`` with rational ``a``, ``b`` and square-free ``d``.

    Rationals are normalized to ``b == 0, d == 0``.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        a, b, d = _frac(self.a), _frac(self.b), int(self.d)
        if d < 0:
            raise BadParameter("d must be non-negative")
        if b != 0 and d > 1:
            m, f = squarefree_decomposition(d)
            if m != 1:
                b, d = b * m, f
        if d == 1:
            a, b = a + b, Fraction(0)
        if b == 0 or d <= 1:
            b, d = Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    # -- construction -----------------------------------------------------
    @classmethod
    def sqrt(cls, n) -> "Scalar":
        """Exact square root of a non-negative rational, when it lies in some Q(sqrt d)."""
        q = _frac(n)
        if q < 0:
            raise BadParameter("negative radicand")
        # sqrt(p/r) = sqrt(p*r)/r
        num = q.numerator * q.denominator
        m, f = squarefree_decomposition(num)
        if f == 1 or f == 0:
            return cls(Fraction(m, q.denominator) if f else Fraction(0))
        return cls(Fraction(0), Fraction(m, q.denominator), f)

    @staticmethod
    def coerce(v: ScalarLike) -> "Scalar":
        if isinstance(v, Scalar):
            return v
        return Scalar(_frac(v))

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    # -- arithmetic --------------------------------------------------------
    def _common(self, other: "Scalar") -> int:
        if self.d == other.d or other.d == 0:
            return self.d
        if self.d == 0:
            return other.d
        raise IncompatibleFields(f"Q(sqrt {self.d}) vs Q(sqrt {other.d})")

    def __add__(self, other):
        o = Scalar.coerce(other)
        d = self._common(o)
        return Scalar(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        o = Scalar.coerce(other)
        d = self._common(o)
        return Scalar(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> "Scalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = Scalar.coerce(other)
        self._common(o)
        if o.d == 0:
            if o.a == 0:
                raise ZeroDivisionError("division by zero scalar")
            return Scalar(self.a / o.a, self.b / o.a, self.d)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise BadParameter("only non-negative integer powers")
        result, base = Scalar(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- order -------------------------------------------------------------
    def sign(self) -> int:
        return scalar_sign(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- evaluation ----------------------------------------------------------
    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def to_mpf(self):
        import mpmath

        return mpmath.mpf(self.a.numerator) / self.a.denominator + (
            mpmath.mpf(self.b.numerator) / self.b.denominator
        ) * mpmath.sqrt(self.d)

    def to_arb(self):
        """Ball enclosure at the current ``flint.ctx.prec``."""
        from flint import arb

        v = arb(self.a.numerator) / self.a.denominator
        if self.b:
            v += arb(self.b.numerator) / self.b.denominator * arb(self.d).sqrt()
        return v

    # -- text ---------------------------------------------------------------
    def __str__(self):
        if self.d == 0:
            return _fmt_frac(self.a)
        op = "-" if self.b < 0 else "+"
        return f"({_fmt_frac(self.a)} {op} {_fmt_frac(abs(self.b))}*sqrt {self.d})"

    def __repr__(self):
        return f"Scalar({self})"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        return parse_scalar(text)


def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def scalar_sign(s: Scalar) -> int:
    """Exact sign of ``a + b*sqrt(d)`` using rational comparisons only."""
    sa = (s.a > 0) - (s.a < 0)
    sb = (s.b > 0) - (s.b < 0)
    if sb == 0 or s.d == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 d
    lhs, rhs = s.a * s.a, s.b * s.b * s.d
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0


ZERO = Scalar(0)
ONE = Scalar(1)

_RAT = r"[+-]?\d+(?:/\d+)?"
_FIELD_RE = re.compile(
    rf"^\(\s*(?P<a>{_RAT})\s*(?P<op>[+-])\s*(?P<b>\d+(?:/\d+)?)\s*\*\s*sqrt\s*\(?\s*(?P<d>\d+)\s*\)?\s*\)$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p/q"``, ``"p"`` or ``"(a/b + c/e*sqrt d)"``."""
    t = text.strip()
    m = _FIELD_RE.match(t)
    if m:
        b = Fraction(m["b"])
        if m["op"] == "-":
            b = -b
        return Scalar(Fraction(m["a"]), b, int(m["d"]))
    if re.fullmatch(_RAT, t):
        return Scalar(Fraction(t))
    raise BadParameter(f"cannot parse field element {text!r}")


@dataclass(frozen=True)
class QuadraticField:
    """Coordinate domain Q(sqrt d) with an optional y-axis stretch.

    A point with field coordinates ``(x, y)`` sits at the real position
    ``(x, y*sqrt(stretch))``.  ``stretch`` is a positive element of the field;
    with ``stretch == 1`` this is the plain Cartesian plane over Q(sqrt d).
    The stretch keeps configurations such as the regular pentagon exact: its
    abscissas lie in Q(sqrt 5) and its ordinates in sin(2pi/5)*Q(sqrt 5).
    """

    d: int = 0
    stretch: Scalar = ONE

    def __post_init__(self):
        if not is_squarefree(self.d):
            raise BadParameter(f"d={self.d} is not square-free")
        d = 0 if self.d in (0, 1) else self.d
        object.__setattr__(self, "d", d)
        st = Scalar.coerce(self.stretch)
        if st.d not in (0, d):
            raise IncompatibleFields("stretch outside the coordinate field")
        if st.sign() <= 0:
            raise BadParameter("stretch must be positive")
        object.__setattr__(self, "stretch", st)

    @property
    def is_plain(self) -> bool:
        return self.stretch == ONE

    def contains(self, s: Scalar) -> bool:
        return s.d in (0, self.d)

    def join(self, other: "QuadraticField") -> "QuadraticField":
        """Smallest field containing both (only trivial joins are supported)."""
        if self == other:
            return self
        if other.d == 0 and other.is_plain and self.contains(other.stretch):
            return self
        if self.d == 0 and self.is_plain and other.contains(self.stretch):
            return other
        if self.stretch == other.stretch and (self.d == 0 or other.d == 0):
            return QuadraticField(self.d or other.d, self.stretch)
        raise IncompatibleFields(f"{self} vs {other}")

    def __str__(self):
        base = "Q" if self.d == 0 else f"Q(sqrt {self.d})"
        return base if self.is_plain else f"{base}[y*sqrt{self.stretch}]"


RATIONALS = QuadraticField(0)
