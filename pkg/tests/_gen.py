"""Random generators shared by the property tests."""
from __future__ import annotations

import random
from fractions import Fraction

from anglekit import Configuration, Point, QuadraticDomain, QuadraticField, Scalar
from anglekit.config import ngon_vertices_exact
from anglekit.errors import AngleKitError
from anglekit.exact import pythagorean_rotation, transform_points
from anglekit.geometry import convex_hull, in_convex_position

SQRT3_HALF = Scalar(0, Fraction(1, 2), 3)


def _frac(rng: random.Random, lo=-9, hi=9, den=6) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def _similar(rng: random.Random, pts, field: QuadraticField, rotate: bool = True):
    if rotate and field.is_plain:
        m, n = rng.randint(0, 6), rng.randint(0, 6)
        rot = pythagorean_rotation(m, n) if (m, n) != (0, 0) else (1, 0)
    else:
        rot = rng.choice([(1, 0), (-1, 0)])
    scale = Fraction(rng.randint(1, 12), rng.randint(1, 5))
    shift = Point(_frac(rng), _frac(rng))
    out = transform_points(pts, rot, scale, shift, rng.random() < 0.5, field)
    rng.shuffle(out)
    return out


def rectangle(rng: random.Random) -> Configuration:
    w, h = Fraction(rng.randint(1, 20), rng.randint(1, 5)), Fraction(rng.randint(1, 20), rng.randint(1, 5))
    pts = [Point(0, 0), Point(w, 0), Point(w, h), Point(0, h)]
    return Configuration(QuadraticDomain(), _similar(rng, pts, QuadraticField(0)))


def twin_equilateral(rng: random.Random) -> Configuration:
    fld = QuadraticField(3)
    pts = [Point(0, 0), Point(1, 0), Point(Fraction(3, 2), SQRT3_HALF), Point(Fraction(1, 2), SQRT3_HALF)]
    return Configuration(QuadraticDomain(fld), _similar(rng, pts, fld))


def pentagon_minus_vertex(rng: random.Random) -> Configuration:
    fld, verts = ngon_vertices_exact(5)
    drop = rng.randrange(5)
    pts = [v for i, v in enumerate(verts) if i != drop]
    return Configuration(QuadraticDomain(fld), _similar(rng, pts, fld))


def generic_convex_quad(rng: random.Random) -> Configuration:
    while True:
        pts = {(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(4)}
        if len(pts) < 4:
            continue
        p = [Point(x, y) for x, y in pts]
        if in_convex_position(p) and not _is_rectangle(p):
            return Configuration(QuadraticDomain(), p)


def _is_rectangle(p) -> bool:
    ring = [p[i] for i in convex_hull(p)]
    for i in range(4):
        u, v = ring[i - 1] - ring[i], ring[(i + 1) % 4] - ring[i]
        if (u.x * v.x + u.y * v.y).sign() != 0:
            return False
    return True


def random_exact_config(rng: random.Random, max_points: int = 8) -> Configuration:
    """Mix of small-grid points (many ties), general rationals and Q(sqrt 3) lattice points."""
    while True:
        n = rng.randint(3, max_points)
        kind = rng.random()
        if kind < 0.4:
            fld = QuadraticField(0)
            raw = {(rng.randint(0, 3), rng.randint(0, 3)) for _ in range(n)}
            pts = [Point(x, y) for x, y in raw]
        elif kind < 0.7:
            fld = QuadraticField(0)
            raw = {(_frac(rng, -20, 20, 7), _frac(rng, -20, 20, 7)) for _ in range(n)}
            pts = [Point(x, y) for x, y in raw]
        else:
            fld = QuadraticField(3)
            raw = {(rng.randint(0, 4), rng.randint(0, 3)) for _ in range(n)}
            # triangular lattice: (a + b/2, b*sqrt3/2)
            pts = [Point(Fraction(a) + Fraction(b, 2), b * SQRT3_HALF) for a, b in raw]
        try:
            return Configuration(QuadraticDomain(fld), pts)
        except AngleKitError:
            continue
