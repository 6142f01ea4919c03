"""Verifiers for the structural lemmas behind the three-angle classification."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .angles import PiRational
from .census import census
from .config import ConcyclicDomain, Configuration, NumericDomain, QuadraticDomain, as_exact
from .errors import DegenerateInput, NotConvex, NotFourPoints, NotInterior
from .exact import Point, angle_key, squared_distance
from .geometry import convex_hull, has_convex_quad, in_convex_position, on_segment, strictly_inside
from .numeric import match_expected
from .report import CensusReport, Certification


class QuadFamily(enum.Enum):
    Rectangle_1a = "rectangle"
    TwinEquilateral_1b = "twin-equilateral"
    PentagonMinusVertex_1c = "pentagon-minus-vertex"
    MoreThanThree = "more-than-three"
    # at most three angles but none of the families: a counterexample
    Unclassified = "unclassified"


RHOMBUS_ANGLES = frozenset({PiRational(1, 6), PiRational(1, 3), PiRational(2, 3)})
PENTAGON_ANGLES = frozenset({PiRational(1, 5), PiRational(2, 5), PiRational(3, 5)})


@dataclass
class QuadClassification:
    family: QuadFamily
    report: CensusReport
    detail: str = ""


def _exact_points(cfg: Configuration):
    ex = as_exact(cfg)
    return list(ex.points), ex.domain.field


def classify_convex_quad_detail(quad: Configuration) -> QuadClassification:
    if len(quad) != 4:
        raise NotFourPoints(f"{len(quad)} points given")
    if isinstance(quad.domain, NumericDomain):
        return _classify_numeric(quad)
    if isinstance(quad.domain, ConcyclicDomain) and quad.domain.n not in (3, 4, 5, 6, 8, 10, 12):
        return _classify_numeric(quad)
    pts, fld = _exact_points(quad)
    if not in_convex_position(pts):
        raise NotConvex("points are not in strictly convex position")
    rep = census(quad)
    if rep.count > 3:
        return QuadClassification(QuadFamily.MoreThanThree, rep)
    order = convex_hull(pts)
    ring = [pts[i] for i in order]
    corners = [angle_key(ring[i - 1], ring[i], ring[(i + 1) % 4], fld) for i in range(4)]
    if all(c.t.sign() == 0 for c in corners):
        return QuadClassification(QuadFamily.Rectangle_1a, rep)
    sides = [squared_distance(ring[i], ring[(i + 1) % 4], fld) for i in range(4)]
    vals = set(rep.pi_values() or ())
    if vals == RHOMBUS_ANGLES and len(set(sides)) == 1:
        return QuadClassification(QuadFamily.TwinEquilateral_1b, rep)
    if vals == PENTAGON_ANGLES and _three_equal_in_a_row(sides):
        return QuadClassification(QuadFamily.PentagonMinusVertex_1c, rep)
    return QuadClassification(QuadFamily.Unclassified, rep, f"census {[str(v) for v in rep.values]}")


def _three_equal_in_a_row(sides) -> bool:
    return any(sides[i] == sides[(i + 1) % 4] == sides[(i + 2) % 4] for i in range(4))


def _classify_numeric(quad: Configuration) -> QuadClassification:
    """Numeric quads: only certified matches to a pi-rational family count."""
    from .config import to_float

    xy = to_float(quad)
    if not _float_convex(xy):
        raise NotConvex("points are not in convex position")
    rep = census(quad)
    if rep.certification is not Certification.Unresolved and rep.upper_count > 3:
        return QuadClassification(QuadFamily.MoreThanThree, rep)
    for fam, expected in (
        (QuadFamily.TwinEquilateral_1b, RHOMBUS_ANGLES),
        (QuadFamily.PentagonMinusVertex_1c, PENTAGON_ANGLES),
    ):
        m = match_expected(rep, expected)
        if m:
            return QuadClassification(fam, m.report)
    right = match_expected(rep, {PiRational(1, 2)})
    return QuadClassification(
        QuadFamily.MoreThanThree,
        rep,
        "no family certified" + ("" if right else "; " + right.detail),
    )


def _float_convex(xy) -> bool:
    import numpy as np

    p = np.asarray(xy)
    c = p.mean(axis=0)
    ang = np.arctan2(p[:, 1] - c[1], p[:, 0] - c[0])
    q = p[np.argsort(ang)]
    crosses = []
    for i in range(4):
        a, b, d = q[i], q[(i + 1) % 4], q[(i + 2) % 4]
        crosses.append((b[0] - a[0]) * (d[1] - b[1]) - (b[1] - a[1]) * (d[0] - b[0]))
    return all(x > 0 for x in crosses) or all(x < 0 for x in crosses)


def classify_convex_quad(quad: Configuration) -> QuadFamily:
    """Which three-angle family a convex quadrilateral belongs to, if any."""
    return classify_convex_quad_detail(quad).family


class HullClass(enum.Enum):
    Class_2a = "2a"
    Class_2b = "2b"
    Class_2c = "2c"
    HasConvexQuad = "has-convex-quad"
    NotTriangularHull = "not-triangular-hull"


def hull_classify(cfg: Configuration) -> HullClass:
    """Classify five points whose hull is a triangle and with no convex 4-subset."""
    if len(cfg) != 5:
        raise DegenerateInput(f"expected 5 points, got {len(cfg)}")
    pts, _ = _exact_points(cfg)
    if len(set(pts)) != 5:
        raise DegenerateInput("repeated points")
    if has_convex_quad(pts):
        return HullClass.HasConvexQuad
    hull = convex_hull(pts)
    if len(hull) != 3:
        return HullClass.NotTriangularHull
    a, b, c = (pts[i] for i in hull)
    d, e = (pts[i] for i in range(5) if i not in hull)
    edges = [(a, b, c), (b, c, a), (c, a, b)]  # (end, end, opposite vertex)

    def edge_of(p):
        return next((k for k, (u, v, _) in enumerate(edges) if on_segment(p, u, v)), None)

    ed, ee = edge_of(d), edge_of(e)
    if ed is not None and ed == ee:
        return HullClass.Class_2a
    for p, q, ep in ((d, e, ed), (e, d, ee)):
        if ep is not None and on_segment(q, p, edges[ep][2]):
            return HullClass.Class_2b
    if ed is None and ee is None:
        for v in (a, b, c):
            if on_segment(d, v, e) or on_segment(e, v, d):
                return HullClass.Class_2c
    raise DegenerateInput("degenerate arrangement outside the listed classes")


@dataclass
class InteriorResult:
    center_of_equilateral: bool
    count: int
    report: CensusReport

    def __bool__(self):
        return self.center_of_equilateral


def verify_interior_lemma(tri, d) -> InteriorResult:
    """A point strictly inside a triangle keeps the census at most 3 only as the
    center of an equilateral triangle.  ``tri`` is a configuration of the three
    vertices; ``d`` a point of the same domain."""
    if len(tri) != 3:
        raise DegenerateInput("need three triangle vertices")
    full = tri.with_points([d])
    pts, _ = _exact_points(full)
    if not strictly_inside(pts[3], *pts[:3]):
        raise NotInterior("point is not strictly inside the triangle")
    rep = census(full)
    return InteriorResult(rep.count <= 3, rep.count, rep)


def is_quad_in_family(points: list[Point], field, family: QuadFamily) -> bool:
    """Exact membership test used by generators and property tests."""
    cfg = Configuration(QuadraticDomain(field), points)
    return classify_convex_quad(cfg) is family
