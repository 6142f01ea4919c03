"""Exact orientation and angle-comparison predicates over quadratic fields."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable

from .angles import Degenerate, PiRational
from .errors import BadParameter, CoincidentPoints, IncompatibleFields
from .scalar import ONE, ZERO, QuadraticField, RATIONALS, Scalar, ScalarLike


@dataclass(frozen=True, slots=True)
class Point:
    """Field coordinates of a point; see :class:`QuadraticField` for the stretch."""

    x: Scalar
    y: Scalar

    def __init__(self, x: ScalarLike, y: ScalarLike):
        object.__setattr__(self, "x", Scalar.coerce(x))
        object.__setattr__(self, "y", Scalar.coerce(y))

    def __sub__(self, o: "Point") -> "Point":
        return Point(self.x - o.x, self.y - o.y)

    def __add__(self, o: "Point") -> "Point":
        return Point(self.x + o.x, self.y + o.y)

    def scaled(self, s: ScalarLike) -> "Point":
        return Point(self.x * s, self.y * s)

    def sort_key(self):
        return (float(self.x), float(self.y))

    def __str__(self):
        return f"({self.x}, {self.y})"


class Orientation(enum.IntEnum):
    CW = -1
    Collinear = 0
    CCW = 1


def _cross(u: Point, v: Point) -> Scalar:
    return u.x * v.y - u.y * v.x


def _dot(u: Point, v: Point, stretch: Scalar) -> Scalar:
    yy = u.y * v.y
    return u.x * v.x + (yy if stretch == ONE else yy * stretch)


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    """Exact sign of the signed area of ``abc`` (the stretch is positive, so it never flips)."""
    return Orientation(_cross(b - a, c - a).sign())


def squared_distance(p: Point, q: Point, field: QuadraticField = RATIONALS) -> Scalar:
    u = p - q
    return _dot(u, u, field.stretch)


@total_ordering
@dataclass(frozen=True, slots=True)
class ExactAngleKey:
    """Projective key of an angle in (0, pi): ``cot(theta) = t / (c*sqrt(stretch))``.

    ``c`` is strictly positive.  Keys compare by the angle they represent.
    """

    t: Scalar
    c: Scalar
    stretch: Scalar = ONE

    def canonical(self) -> Scalar:
        """Hashable representative; equal iff the angles are equal (same field)."""
        return self.t / self.c

    def __float__(self):
        return math.atan2(float(self.c) * math.sqrt(float(self.stretch)), float(self.t))

    def __eq__(self, other):
        if not isinstance(other, ExactAngleKey):
            return NotImplemented
        return key_compare(self, other) == 0

    def __lt__(self, other):
        return key_compare(self, other) < 0

    def __hash__(self):
        return hash((self.canonical(), self.stretch))

    def pi_rational(self, max_den: int = 360) -> PiRational | None:
        return key_pi_rational(self, max_den)

    def to_arb(self):
        from flint import arb

        return arb.atan2(self.c.to_arb() * self.stretch.to_arb().sqrt(), self.t.to_arb())

    def __str__(self):
        pr = self.pi_rational()
        return str(pr) if pr is not None else f"{float(self):.17g}"


def angle_key(
    a: Point, b: Point, c: Point, field: QuadraticField = RATIONALS
) -> ExactAngleKey | Degenerate:
    """Angle at vertex ``b`` of the triple ``(a, b, c)``."""
    if a == b or b == c or a == c:
        raise CoincidentPoints(f"{a}, {b}, {c}")
    u, v = a - b, c - b
    cr = _cross(u, v)
    dt = _dot(u, v, field.stretch)
    s = cr.sign()
    if s == 0:
        return Degenerate.Zero if dt.sign() > 0 else Degenerate.Pi
    return ExactAngleKey(dt, cr if s > 0 else -cr, field.stretch)


def key_compare(k1: ExactAngleKey, k2: ExactAngleKey) -> int:
    """-1, 0, +1 as theta1 <, =, > theta2."""
    if k1.stretch != k2.stretch:
        raise IncompatibleFields("keys from differently stretched fields")
    # theta1 < theta2  <=>  cot1 > cot2  <=>  t1*c2 > t2*c1
    return -(k1.t * k2.c - k2.t * k1.c).sign()


# -- pi-rational recognition -------------------------------------------------------


def _cpow(re_: Scalar, im_: Scalar, stretch: Scalar, e: int):
    """Power of ``re + i*sqrt(stretch)*im`` kept in the same split form."""

    def mul(x, y):
        a1, b1 = x
        a2, b2 = y
        return (a1 * a2 - stretch * b1 * b2, a1 * b2 + b1 * a2)

    result, base = (ONE, ZERO), (re_, im_)
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def key_pi_rational(key: ExactAngleKey, max_den: int = 360) -> PiRational | None:
    """Return ``p/q*pi`` if the key is exactly that angle, else ``None``.

    A float estimate proposes ``p/q``; the claim is then checked exactly:
    ``(t + i*c*sqrt(stretch))**q`` must be real with sign ``(-1)**p``.
    """
    guess = Fraction(float(key) / math.pi).limit_denominator(max_den)
    p, q = guess.numerator, guess.denominator
    if not 0 < p < q:
        return None
    if abs(float(key) - math.pi * p / q) > 1e-9:
        return None
    re_, im_ = _cpow(key.t, key.c, key.stretch, q)
    if im_ != ZERO:
        return None
    want = 1 if p % 2 == 0 else -1
    return PiRational(p, q) if re_.sign() == want else None


# -- similarity transforms -----------------------------------------------------


def transform_points(
    points: Iterable[Point],
    rot: tuple[ScalarLike, ScalarLike] = (1, 0),
    scale: ScalarLike = 1,
    shift: Point | None = None,
    reflect: bool = False,
    field: QuadraticField = RATIONALS,
) -> list[Point]:
    """Apply ``x -> scale * R(rot) * F * x + shift`` in field coordinates.

    ``F`` is the optional reflection ``(x, y) -> (x, -y)``.  For a stretched
    field only rotations by (+-1, 0) keep coordinates in the field.
    """
    cs, sn = Scalar.coerce(rot[0]), Scalar.coerce(rot[1])
    scale = Scalar.coerce(scale)
    if scale.sign() <= 0:
        raise BadParameter("scale must be positive")
    if cs * cs + sn * sn != ONE:
        raise BadParameter("rotation must be a point on the unit circle")
    if not field.is_plain and sn != ZERO:
        raise BadParameter("stretched fields only admit rotations by 0 or pi")
    shift = shift or Point(0, 0)
    out = []
    for p in points:
        x, y = p.x, (-p.y if reflect else p.y)
        rx, ry = cs * x - sn * y, sn * x + cs * y
        out.append(Point(rx * scale + shift.x, ry * scale + shift.y))
    return out


def apply_similarity(cfg, rot=(1, 0), scale=1, shift: Point | None = None, reflect: bool = False):
    """Similarity image of a quadratic-domain configuration."""
    from .config import Configuration, QuadraticDomain

    if not isinstance(cfg.domain, QuadraticDomain):
        raise BadParameter("apply_similarity needs a quadratic-field configuration")
    pts = transform_points(cfg.points, rot, scale, shift, reflect, cfg.domain.field)
    return Configuration(cfg.domain, pts, declared_census=cfg.declared_census, name=cfg.name)


def pythagorean_rotation(m: int, n: int) -> tuple[Fraction, Fraction]:
    """Rational unit vector ((m^2-n^2)/(m^2+n^2), 2mn/(m^2+n^2))."""
    h = m * m + n * n
    if h == 0:
        raise BadParameter("m, n both zero")
    return Fraction(m * m - n * n, h), Fraction(2 * m * n, h)
