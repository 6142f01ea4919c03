"""Point configurations and their coordinate domains."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from flint import arb

from .angles import PiRational
from .cyclic import CENTER, CyclicPoint
from .errors import AllCollinear, BadParameter, CoincidentPoints, TooFewPoints
from .exact import Orientation, Point, orientation
from .numeric import NumericPoint, working_precision
from .scalar import ONE, ZERO, QuadraticField, Scalar


@dataclass(frozen=True)
class QuadraticDomain:
    field: QuadraticField = QuadraticField(0)

    @property
    def tag(self) -> str:
        return "quadratic"


@dataclass(frozen=True)
class ConcyclicDomain:
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise BadParameter("n must be at least 3")

    @property
    def tag(self) -> str:
        return "concyclic"


@dataclass(frozen=True)
class NumericDomain:
    @property
    def tag(self) -> str:
        return "numeric"


Domain = Union[QuadraticDomain, ConcyclicDomain, NumericDomain]


@dataclass(frozen=True)
class Configuration:
    """A validated planar point set: at least 3 distinct, not all collinear."""

    domain: Domain
    points: tuple
    declared_census: frozenset[PiRational] | None = None
    name: str | None = None
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if self.declared_census is not None:
            object.__setattr__(self, "declared_census", frozenset(self.declared_census))
        if len(self.points) < 3:
            raise TooFewPoints("a configuration needs at least 3 points")
        if len(set(self.points)) != len(self.points):
            raise CoincidentPoints("repeated point in configuration")
        _check_points(self)

    def __len__(self):
        return len(self.points)

    @property
    def is_exact(self) -> bool:
        return not isinstance(self.domain, NumericDomain)

    def subset(self, indices: Iterable[int], name: str | None = None) -> "Configuration":
        return Configuration(self.domain, [self.points[i] for i in indices], name=name)

    def with_points(self, extra: Sequence, name: str | None = None) -> "Configuration":
        return Configuration(self.domain, list(self.points) + list(extra), name=name)


def _check_points(cfg: Configuration):
    pts = cfg.points
    dom = cfg.domain
    if isinstance(dom, QuadraticDomain):
        for p in pts:
            if not isinstance(p, Point):
                raise BadParameter(f"expected an exact point, got {p!r}")
            for s in (p.x, p.y):
                if not dom.field.contains(s):
                    raise BadParameter(f"coordinate {s} outside {dom.field}")
        a, b = pts[0], pts[1]
        if all(orientation(a, b, c) is Orientation.Collinear for c in pts[2:]):
            raise AllCollinear("all points collinear")
    elif isinstance(dom, ConcyclicDomain):
        for p in pts:
            if not isinstance(p, CyclicPoint):
                raise BadParameter(f"expected a cyclic point, got {p!r}")
            if not p.is_center and not 0 <= p.index < dom.n:
                raise BadParameter(f"vertex index {p.index} outside 0..{dom.n - 1}")
        # three distinct points of a circle are never collinear, so only the
        # center with one diametral pair is
        if len(pts) == 3 and CENTER in pts:
            i, j = (p.index for p in pts if not p.is_center)
            if 2 * ((i - j) % dom.n) == dom.n:
                raise AllCollinear("all points collinear")
    else:
        for p in pts:
            if not isinstance(p, NumericPoint):
                raise BadParameter(f"expected a numeric point, got {p!r}")
        ev = [p.evaluate(256) for p in pts]
        with working_precision(256):
            for (i, p), (j, q) in combinations(enumerate(ev), 2):
                if (p[0] - q[0]).is_zero() and (p[1] - q[1]).is_zero():
                    raise CoincidentPoints(f"points {i} and {j} coincide")
            a, b = ev[0], ev[1]
            ux, uy = b[0] - a[0], b[1] - a[1]
            if all((ux * (c[1] - a[1]) - uy * (c[0] - a[0])).is_zero() for c in ev[2:]):
                raise AllCollinear("all points collinear")


# -- conversions ---------------------------------------------------------------


def _scalar_coord(s: Scalar, factor: Scalar | None = None):
    def ev(bits: int) -> arb:
        v = s.to_arb()
        if factor is not None and factor != ONE:
            v *= factor.to_arb().sqrt()
        return v

    return ev


def _cyclic_coord(j: int, n: int, sine: bool):
    def ev(bits: int) -> arb:
        t = arb(2 * j) / n
        return t.sin_pi() if sine else t.cos_pi()

    return ev


def to_numeric(cfg: Configuration) -> list[NumericPoint]:
    """Points as arbitrary-precision handles (exact domains evaluate their closed forms)."""
    dom = cfg.domain
    if isinstance(dom, NumericDomain):
        return list(cfg.points)
    if isinstance(dom, QuadraticDomain):
        st = dom.field.stretch
        return [
            NumericPoint(
                p.x.a if p.x.is_rational else _scalar_coord(p.x),
                p.y.a if p.y.is_rational and st == ONE else _scalar_coord(p.y, st),
            )
            for p in cfg.points
        ]
    out = []
    for p in cfg.points:
        if p.is_center:
            out.append(NumericPoint(0, 0))
        else:
            out.append(NumericPoint(_cyclic_coord(p.index, dom.n, False), _cyclic_coord(p.index, dom.n, True)))
    return out


def to_float(cfg: Configuration) -> list[tuple[float, float]]:
    return [p.to_float() for p in to_numeric(cfg)]


def numeric_config(cfg: Configuration) -> Configuration:
    if isinstance(cfg.domain, NumericDomain):
        return cfg
    return Configuration(NumericDomain(), to_numeric(cfg), cfg.declared_census, cfg.name)


# -- exact coordinates of regular polygons ------------------------------------------

_PENTA_STRETCH = Scalar(Fraction(5, 8), Fraction(1, 8), 5)  # sin^2(2pi/5)


def _cyclic_frame(n: int):
    """Field and one-step rotation for the exact vertices of a regular n-gon.

    Returns ``(field, c, r, steps)`` where a rotation by ``2pi*steps/n`` in
    field coordinates is ``x' = c*x - r*stretch*y``, ``y' = r*x + c*y``.
    """
    h = Fraction(1, 2)
    if n == 4:
        return QuadraticField(0), ZERO, ONE, 1
    if n in (3, 6, 12):
        # 30 degree step in Q(sqrt 3)
        return QuadraticField(3), Scalar(0, h, 3), Scalar(h), 12 // n
    if n == 8:
        return QuadraticField(2), Scalar(0, h, 2), Scalar(0, h, 2), 1
    if n in (5, 10):
        # 36 degree step; ordinates are measured in units of sin(72 deg)
        fld = QuadraticField(5, _PENTA_STRETCH)
        return fld, Scalar(Fraction(1, 4), Fraction(1, 4), 5), Scalar(-h, h, 5), 10 // n
    raise BadParameter(f"no exact quadratic coordinates for the regular {n}-gon")


EXACT_NGONS = (3, 4, 5, 6, 8, 10, 12)


def ngon_vertices_exact(n: int) -> tuple[QuadraticField, list[Point]]:
    fld, c, r, steps = _cyclic_frame(n)
    st = fld.stretch
    verts, p = [], Point(1, 0)
    total = n * steps
    for i in range(total):
        if i % steps == 0:
            verts.append(p)
        p = Point(c * p.x - r * st * p.y, r * p.x + c * p.y)
    return fld, verts


def concyclic_to_exact(cfg: Configuration) -> Configuration:
    """Quadratic-field coordinates for a concyclic configuration with n in EXACT_NGONS."""
    if not isinstance(cfg.domain, ConcyclicDomain):
        raise BadParameter("not a concyclic configuration")
    fld, verts = ngon_vertices_exact(cfg.domain.n)
    pts = [Point(0, 0) if p.is_center else verts[p.index] for p in cfg.points]
    return Configuration(QuadraticDomain(fld), pts, cfg.declared_census, cfg.name)


def as_exact(cfg: Configuration) -> Configuration:
    """Quadratic-domain view of an exact configuration."""
    if isinstance(cfg.domain, QuadraticDomain):
        return cfg
    if isinstance(cfg.domain, ConcyclicDomain):
        return concyclic_to_exact(cfg)
    raise BadParameter("numeric configurations have no exact coordinates")
