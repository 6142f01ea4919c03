"""Exact angles among vertices of a regular n-gon and its center.

Every angle is a multiple of pi/(2n): inscribed angles between vertices are
multiples of pi/n, and the center contributes central angles and the base
angles of the isosceles triangles (center, V_p, V_r).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .angles import ZERO_ANGLE, Degenerate, Mode, PiRational
from .errors import BadParameter, TooFewPoints


class Tag(enum.Enum):
    Center = "center"
    Vertex = "vertex"


@dataclass(frozen=True)
class CyclicPoint:
    tag: Tag
    index: int = -1

    @staticmethod
    def vertex(i: int) -> "CyclicPoint":
        return CyclicPoint(Tag.Vertex, i)

    @property
    def is_center(self) -> bool:
        return self.tag is Tag.Center

    def __lt__(self, other):
        return (self.tag is Tag.Vertex, self.index) < (other.tag is Tag.Vertex, other.index)

    def __str__(self):
        return "C" if self.is_center else f"V{self.index}"


CENTER = CyclicPoint(Tag.Center)


@dataclass(frozen=True)
class CyclicConfig:
    n: int
    vertices: frozenset[int]
    include_center: bool = False

    def __init__(self, n: int, vertices: Iterable[int], include_center: bool = False):
        if n < 3:
            raise BadParameter("n must be at least 3")
        vs = frozenset(int(v) % n for v in vertices)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "include_center", bool(include_center))
        if len(vs) + self.include_center < 3:
            raise TooFewPoints("a cyclic configuration needs at least 3 points")

    def points(self) -> list[CyclicPoint]:
        pts = [CyclicPoint.vertex(v) for v in sorted(self.vertices)]
        return ([CENTER] if self.include_center else []) + pts


def _check(n: int, *idx: int):
    if n < 3:
        raise BadParameter("n must be at least 3")
    if len({i % n for i in idx}) != len(idx):
        raise BadParameter(f"indices {idx} not distinct mod {n}")


def inscribed_angle(p: int, q: int, r: int, n: int) -> PiRational:
    """Angle at vertex q subtending vertices p and r."""
    _check(n, p, q, r)
    m = abs((p - q) % n - (r - q) % n)
    return PiRational(m, n)


def central_angle(p: int, r: int, n: int) -> PiRational | Degenerate:
    """Angle at the center subtending vertices p and r."""
    _check(n, p, r)
    d = (r - p) % n
    if 2 * d == n:
        return Degenerate.Pi
    return PiRational(2 * min(d, n - d), n)


def base_angle(p: int, r: int, n: int) -> PiRational | Degenerate:
    """Angle at vertex p of the triangle (center, V_p, V_r)."""
    _check(n, p, r)
    d = min((r - p) % n, (p - r) % n)
    if 2 * d == n:
        return Degenerate.Zero
    return PiRational(n - 2 * d, 2 * n)


def triple_angle(a: CyclicPoint, b: CyclicPoint, c: CyclicPoint, n: int) -> PiRational | Degenerate:
    """Angle at vertex b, dispatching on where the center sits."""
    if b.is_center:
        return central_angle(a.index, c.index, n)
    if a.is_center:
        return base_angle(b.index, c.index, n)
    if c.is_center:
        return base_angle(b.index, a.index, n)
    return inscribed_angle(a.index, b.index, c.index, n)


@dataclass
class CyclicCensus:
    values: list[PiRational]
    witnesses: dict[PiRational, tuple[int, int, int]] = field(default_factory=dict)


def census_cyclic_points(points: Sequence[CyclicPoint], n: int, include_zero: bool = False) -> CyclicCensus:
    """Distinct angles over (vertex, unordered endpoint pair) triples.

    Witness triples index into ``points`` as ``(a, vertex, c)``.
    """
    if len(points) < 3:
        raise TooFewPoints("need at least 3 points")
    for p in points:
        if not p.is_center:
            _check(n, p.index)
    # work in integer units of pi/(2n); -1 marks pi, 0 marks the zero angle
    idx = [-1 if p.is_center else p.index for p in points]
    seen: dict[int, tuple[int, int, int]] = {}
    m = len(points)
    for j in range(m):
        q = idx[j]
        for i in range(m):
            if i == j:
                continue
            a = idx[i]
            for k in range(i + 1, m):
                if k == j:
                    continue
                c = idx[k]
                if q < 0:
                    d = (c - a) % n
                    u = -1 if 2 * d == n else 4 * min(d, n - d)
                elif a < 0 or c < 0:
                    r = c if a < 0 else a
                    d = min((r - q) % n, (q - r) % n)
                    u = 0 if 2 * d == n else n - 2 * d
                else:
                    u = 2 * abs((a - q) % n - (c - q) % n)
                if u < 0 or (u == 0 and not include_zero):
                    continue
                if u not in seen:
                    seen[u] = (i, j, k)
    keys = sorted(seen)
    values = [PiRational(u, 2 * n) for u in keys]
    return CyclicCensus(values, {v: seen[u] for v, u in zip(values, keys)})


def census_cyclic(cfg: CyclicConfig, mode: Mode = Mode.ExcludeZero) -> list[PiRational]:
    """Sorted exact census of a cyclic configuration."""
    return census_cyclic_points(cfg.points(), cfg.n, mode is Mode.IncludeZero).values
