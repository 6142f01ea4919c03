"""Exact hulls, incidence tests and similarity of small point sets."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np

from .exact import Orientation, Point, orientation, squared_distance
from .scalar import QuadraticField, RATIONALS


def _xy_key(p: Point):
    return (p.x, p.y)


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Indices of strict hull vertices in counter-clockwise order.

    Points on hull edges are not vertices.  The y stretch of a field is a
    positive factor, so sorting and orientation in field coordinates match
    the real plane.
    """
    order = sorted(range(len(points)), key=lambda i: _xy_key(points[i]))
    if len(order) < 3:
        return order

    def half(idx):
        out: list[int] = []
        for i in idx:
            while len(out) >= 2 and orientation(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = half(order)
    upper = half(reversed(order))
    return lower[:-1] + upper[:-1]


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True if ``p`` lies on the closed segment ``ab``."""
    if orientation(a, b, p) is not Orientation.Collinear:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def strictly_inside(p: Point, a: Point, b: Point, c: Point) -> bool:
    o = [orientation(a, b, p), orientation(b, c, p), orientation(c, a, p)]
    return all(v is Orientation.CCW for v in o) or all(v is Orientation.CW for v in o)


def in_convex_position(quad: Sequence[Point]) -> bool:
    """Four points forming a strictly convex quadrilateral."""
    if len(quad) != 4:
        return False
    for tri in combinations(quad, 3):
        if orientation(*tri) is Orientation.Collinear:
            return False
    return len(convex_hull(quad)) == 4


def hull_order(quad: Sequence[Point]) -> list[int]:
    return convex_hull(quad)


def has_convex_quad(points: Sequence[Point]) -> bool:
    return any(in_convex_position(q) for q in combinations(points, 4))


# -- similarity ------------------------------------------------------------------


def similar_exact(
    p: Sequence[Point], q: Sequence[Point], fp: QuadraticField = RATIONALS, fq: QuadraticField | None = None
) -> bool:
    """Exact similarity (rigid motion, dilation, reflection) of two point sets.

    A bijection with all squared distances in a common ratio is a
    similarity.  Backtracking keeps this cheap for the small sets used here.
    """
    fq = fq or fp
    n = len(p)
    if n != len(q):
        return False
    dp = [[squared_distance(p[i], p[j], fp) for j in range(n)] for i in range(n)]
    dq = [[squared_distance(q[i], q[j], fq) for j in range(n)] for i in range(n)]
    if n == 1:
        return True
    assign: list[int] = []
    used = [False] * n

    def ok(i: int, j: int, ratio) -> bool:
        return all(dq[j][assign[m]] * ratio[1] == dp[i][m] * ratio[0] for m in range(i))

    def rec(i: int, ratio) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j]:
                continue
            # the first pair fixes the ratio: dq * r1 == dp * r0
            r = (dq[j][assign[0]], dp[1][0]) if i == 1 else ratio
            if i > 1 and not ok(i, j, r):
                continue
            used[j] = True
            assign.append(j)
            if rec(i + 1, r):
                return True
            assign.pop()
            used[j] = False
        return False

    return rec(0, None)


def procrustes_distance(p: np.ndarray, q: np.ndarray) -> float:
    """Similarity distance between two ordered point lists.

    Both sets are centered and scaled to unit norm, then aligned by the best
    rotation or reflection; the residual norm is returned.
    """
    a = p - p.mean(axis=0)
    b = q - q.mean(axis=0)
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0 or nb == 0:
        return float("inf")
    a, b = a / na, b / nb
    u, _, vt = np.linalg.svd(a.T @ b)
    # allowing det -1 accepts reflections; the residual is taken directly
    # because sqrt(2 - 2 sum(s)) loses half the digits near zero
    return float(np.linalg.norm(a @ (u @ vt) - b))


def set_similarity_distance(p: np.ndarray, q: np.ndarray) -> float:
    """Minimum Procrustes distance over vertex correspondences (small sets)."""
    from itertools import permutations

    best = float("inf")
    for perm in permutations(range(len(q))):
        best = min(best, procrustes_distance(p, q[list(perm)]))
    return best


def line_intersection(p1: Point, p2: Point, p3: Point, p4: Point) -> Point:
    """Intersection of lines p1p2 and p3p4 (linear, so field coordinates stay exact)."""
    d1, d2 = p2 - p1, p4 - p3
    den = d1.x * d2.y - d1.y * d2.x
    if den.sign() == 0:
        raise ValueError("parallel lines")
    w = p3 - p1
    t = (w.x * d2.y - w.y * d2.x) / den
    return Point(p1.x + t * d1.x, p1.y + t * d1.y)
