"""Finite candidate sets for subset search, with their angle tables and symmetries."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Callable

import numpy as np

from ..angles import Degenerate
from ..config import ConcyclicDomain, Configuration, QuadraticDomain
from ..cyclic import CENTER, CyclicPoint, triple_angle
from ..errors import BadParameter, UniverseTooSmall
from ..exact import Point, angle_key

PI_ID = -1
ZERO_ID = -2


@dataclass
class SearchUniverse:
    """Candidate points plus a symmetry group acting on their indices."""

    kind: str
    params: tuple
    config: Configuration
    symmetries: list[tuple[int, ...]] = field(default_factory=list)
    _table: tuple | None = field(default=None, repr=False)

    @property
    def name(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}" if self.params else self.kind

    def __len__(self):
        return len(self.config.points)

    def angle_table(self):
        """``(table, values)``: ``table[i, j, k]`` is the id of the angle at j."""
        if self._table is None:
            self._table = _build_table(self.config)
        return self._table

    def canonical(self, subset) -> tuple[int, ...]:
        best = tuple(sorted(subset))
        for perm in self.symmetries:
            img = tuple(sorted(perm[i] for i in subset))
            if img < best:
                best = img
        return best


def _build_table(cfg: Configuration):
    n = len(cfg.points)
    table = np.full((n, n, n), PI_ID, dtype=np.int32)
    ids: dict = {}
    values: list = []

    def intern(key, value):
        v = ids.get(key)
        if v is None:
            v = ids[key] = len(values)
            values.append(value)
        return v

    dom = cfg.domain
    if isinstance(dom, ConcyclicDomain):
        pts = cfg.points

        def angle(i, j, k):
            v = triple_angle(pts[i], pts[j], pts[k], dom.n)
            return v, v

    elif isinstance(dom, QuadraticDomain):
        pts = cfg.points
        integral = dom.field.d == 0 and dom.field.is_plain and all(
            p.x.a.denominator == 1 and p.y.a.denominator == 1 for p in pts
        )
        if integral:
            xy = [(int(p.x.a), int(p.y.a)) for p in pts]

            def angle(i, j, k):
                ux, uy = xy[i][0] - xy[j][0], xy[i][1] - xy[j][1]
                vx, vy = xy[k][0] - xy[j][0], xy[k][1] - xy[j][1]
                cr = abs(ux * vy - uy * vx)
                dt = ux * vx + uy * vy
                if cr == 0:
                    v = Degenerate.Zero if dt > 0 else Degenerate.Pi
                    return v, v
                g = gcd(cr, dt)
                return (dt // g, cr // g), None

        else:

            def angle(i, j, k):
                key = angle_key(pts[i], pts[j], pts[k], dom.field)
                if isinstance(key, Degenerate):
                    return key, key
                return key.canonical(), key

    else:
        raise BadParameter("subset search needs an exact universe")

    for j in range(n):
        for i in range(n):
            if i == j:
                continue
            for k in range(i + 1, n):
                if k == j:
                    continue
                key, value = angle(i, j, k)
                if key is Degenerate.Pi:
                    aid = PI_ID
                elif key is Degenerate.Zero:
                    aid = ZERO_ID
                else:
                    aid = intern(key, value if value is not None else (i, j, k))
                table[i, j, k] = table[k, j, i] = aid
    # integral grids record a witness triple; turn it into an exact key lazily
    if isinstance(dom, QuadraticDomain):
        values = [
            angle_key(pts[v[0]], pts[v[1]], pts[v[2]], dom.field) if isinstance(v, tuple) else v for v in values
        ]
    return table, values


# -- builders -----------------------------------------------------------------------------


def _dihedral_cyclic(n: int, with_center: bool) -> list[tuple[int, ...]]:
    off = 1 if with_center else 0
    perms = []
    for r in range(n):
        for s in (1, -1):
            perm = ([0] if with_center else []) + [off + ((s * v + r) % n) for v in range(n)]
            perms.append(tuple(perm))
    return perms


def cyclic_universe(n: int, include_center: bool = True) -> SearchUniverse:
    pts = ([CENTER] if include_center else []) + [CyclicPoint.vertex(i) for i in range(n)]
    cfg = Configuration(ConcyclicDomain(n), pts, name=f"ngon{'_center' if include_center else ''}:{n}")
    return SearchUniverse("ngon_center" if include_center else "ngon", (n,), cfg, _dihedral_cyclic(n, include_center))


def grid_universe(g: int) -> SearchUniverse:
    """The g x g integer grid with its square symmetry group."""
    if g < 2:
        raise BadParameter("grid size must be at least 2")
    coords = [(x, y) for x in range(g) for y in range(g)]
    index = {c: i for i, c in enumerate(coords)}
    m = g - 1
    maps: list[Callable[[int, int], tuple[int, int]]] = [
        lambda x, y: (x, y),
        lambda x, y: (m - y, x),
        lambda x, y: (m - x, m - y),
        lambda x, y: (y, m - x),
        lambda x, y: (m - x, y),
        lambda x, y: (x, m - y),
        lambda x, y: (y, x),
        lambda x, y: (m - y, m - x),
    ]
    perms = [tuple(index[f(x, y)] for x, y in coords) for f in maps]
    cfg = Configuration(QuadraticDomain(), [Point(x, y) for x, y in coords], name=f"grid:{g}")
    return SearchUniverse("grid", (g,), cfg, perms)


def explicit_universe(cfg: Configuration) -> SearchUniverse:
    return SearchUniverse("explicit", (), cfg, [])


_DESC = re.compile(r"^(?P<kind>ngon_center|ngon|grid):(?P<lo>\d+)(?:\.\.(?P<hi>\d+))?$")


def parse_universes(desc: str) -> list[SearchUniverse]:
    """``ngon_center:10``, ``ngon:4..12``, ``grid:7`` (ranges expand to several universes)."""
    m = _DESC.match(desc.strip())
    if not m:
        raise BadParameter(f"bad universe descriptor {desc!r}")
    lo = int(m["lo"])
    hi = int(m["hi"]) if m["hi"] else lo
    if hi < lo:
        raise BadParameter(f"empty range in {desc!r}")
    out = []
    for v in range(lo, hi + 1):
        if m["kind"] == "grid":
            out.append(grid_universe(v))
        else:
            if v < 3:
                raise UniverseTooSmall(f"{m['kind']}:{v}")
            out.append(cyclic_universe(v, m["kind"] == "ngon_center"))
    return out
