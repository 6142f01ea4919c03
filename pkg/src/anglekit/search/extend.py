"""Find every point that can join a base configuration without exceeding k angles.

Pipeline: a float grid scored by a clustering cost, local refinement of the
grid minima (float least squares, then mpmath Gauss-Newton), snapping to
exact field elements, and exact census certification.  Points that refine
but do not snap are reported separately and never certified.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import mpmath
import numpy as np
from scipy.optimize import least_squares

from ..census import census
from ..config import Configuration, QuadraticDomain, as_exact, to_float
from ..errors import BadParameter, BaseCensusExceedsK, IncompatibleFields
from ..exact import Point
from ..geometry import similar_exact
from ..kernels import grid_cost
from ..scalar import QuadraticField, Scalar

SNAP_DENOMINATOR = 64
SNAP_FIELDS = (2, 3, 5, 6, 7)
MP_DIGITS = 50


@dataclass(frozen=True)
class GridUniverse:
    """Square grid of candidates: ``box_factor`` times the base diameter, ``divisions`` steps per diameter."""

    box_factor: float = 3.0
    divisions: int = 200


@dataclass
class CertifiedPoint:
    point: Point
    field: QuadraticField
    census_count: int
    status: str = "exact"

    def to_float(self) -> tuple[float, float]:
        root = math.sqrt(float(self.field.stretch))
        return float(self.point.x), float(self.point.y) * root


@dataclass
class ExtensionResult:
    base: str
    k: int
    certified_points: list[CertifiedPoint]
    uncertified: list[tuple[float, float]]
    compatibility: dict[int, list[int]]
    max_compatible_sets: list[tuple[int, ...]]
    maximal_configs: list[Configuration] = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    @property
    def max_compatible_size(self) -> int:
        return max((len(s) for s in self.max_compatible_sets), default=0)


# -- float model ------------------------------------------------------------------


def _angles(base: np.ndarray, p) -> list:
    """Angles involving ``p`` (as vertex, then as endpoint); works for floats and mpf."""
    atan2 = mpmath.atan2 if isinstance(p[0], mpmath.mpf) else math.atan2
    out = []
    m = len(base)
    px, py = p
    for i, l in combinations(range(m), 2):
        ux, uy = base[i][0] - px, base[i][1] - py
        vx, vy = base[l][0] - px, base[l][1] - py
        out.append(atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy))
    for j in range(m):
        for i in range(m):
            if i == j:
                continue
            ux, uy = base[i][0] - base[j][0], base[i][1] - base[j][1]
            vx, vy = px - base[j][0], py - base[j][1]
            out.append(atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy))
    return out


def _assign(new: list[float], base_vals: list[float], k: int):
    """Cut the k+1 widest gaps; returns per-angle targets (float) or None for free clusters.

    Result is ``(targets, n_free)`` where targets[i] is a fixed value or an
    integer index of a free cluster variable.
    """
    tagged = [(v, "new", i) for i, v in enumerate(new)]
    tagged += [(v, "base", v) for v in base_vals]
    tagged += [(0.0, "anchor", 0.0), (math.pi, "anchor", math.pi)]
    tagged.sort(key=lambda t: t[0])
    gaps = sorted(range(len(tagged) - 1), key=lambda i: tagged[i + 1][0] - tagged[i][0], reverse=True)
    cuts = set(gaps[: k + 1])
    clusters, cur = [], [tagged[0]]
    for i in range(1, len(tagged)):
        if i - 1 in cuts:
            clusters.append(cur)
            cur = []
        cur.append(tagged[i])
    clusters.append(cur)
    targets: list = [None] * len(new)
    n_free = 0
    for cl in clusters:
        fixed = [t[2] for t in cl if t[1] in ("base", "anchor")]
        if len(set(fixed)) > 1:
            return None, 0
        if fixed:
            tgt = fixed[0]
        else:
            tgt = n_free
            n_free += 1
        for t in cl:
            if t[1] == "new":
                targets[t[2]] = tgt
    return targets, n_free


def _residuals(base, targets, p, free):
    a = _angles(base, p)
    return [ai - (free[t] if isinstance(t, int) else t) for ai, t in zip(a, targets)]


def _refine_float(base: np.ndarray, base_vals: list[float], k: int, p0, scale: float):
    p = np.array(p0, dtype=float)
    targets = None
    for _ in range(4):
        new = _angles(base, p)
        targets, n_free = _assign(new, base_vals, k)
        if targets is None:
            return None
        free0 = []
        for f in range(n_free):
            vals = [new[i] for i, t in enumerate(targets) if isinstance(t, int) and not isinstance(t, bool) and t == f]
            free0.append(float(np.mean(vals)))

        def fun(x):
            return np.asarray(_residuals(base, targets, (x[0], x[1]), x[2:]))

        x0 = np.concatenate([p, free0])
        try:
            sol = least_squares(fun, x0, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=400)
        except ValueError:
            sol = least_squares(fun, x0, xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=400)
        p_new = sol.x[:2]
        moved = np.linalg.norm(p_new - p)
        p = p_new
        if not np.all(np.isfinite(p)):
            return None
        new_targets, _ = _assign(_angles(base, p), base_vals, k)
        if new_targets == targets and moved < 1e-9 * scale:
            break
    free = sol.x[2:]
    res = np.max(np.abs(_residuals(base, targets, p, free))) if targets else 0.0
    return p, targets, list(free), float(res)


def _refine_mp(base_mp, targets, p, free, eps: float):
    """Gauss-Newton at MP_DIGITS with a finite-difference Jacobian."""
    with mpmath.workdps(MP_DIGITS + 10):
        tmap = [t if isinstance(t, int) else mpmath.mpf(t) for t in targets]
        # fixed targets are exact values: pi-rationals recovered from floats
        tmap = [_exact_target(t) if not isinstance(t, int) else t for t in tmap]
        x = [mpmath.mpf(p[0]), mpmath.mpf(p[1])] + [mpmath.mpf(f) for f in free]
        h = mpmath.mpf(10) ** (-(MP_DIGITS // 2))

        def fun(v):
            return mpmath.matrix(_residuals(base_mp, tmap, (v[0], v[1]), v[2:]))

        r = fun(x)
        for _ in range(40):
            cols = []
            for j in range(len(x)):
                xp = list(x)
                xp[j] += h
                cols.append((fun(xp) - r) / h)
            jac = mpmath.matrix(len(r), len(x))
            for j, c in enumerate(cols):
                for i in range(len(r)):
                    jac[i, j] = c[i]
            try:
                step, _ = mpmath.qr_solve(jac, -r)
            except (ZeroDivisionError, ValueError):
                break
            x = [xi + step[i] for i, xi in enumerate(x)]
            r = fun(x)
            if mpmath.norm(step) < mpmath.mpf(10) ** (-(MP_DIGITS - 5)):
                break
        res = max(abs(v) for v in r) if len(r) else mpmath.mpf(0)
        return (x[0], x[1]), res, res < eps


def _exact_target(t):
    """Base angles and anchors are recovered at full precision from their float value."""
    q = Fraction(float(t) / math.pi).limit_denominator(720)
    if abs(float(t) - math.pi * q) < 1e-9:
        return mpmath.pi * q.numerator / q.denominator
    return t


# -- snapping ---------------------------------------------------------------------------


def _snap_scalar(v, fields) -> Scalar | None:
    tol = mpmath.mpf(10) ** (-(MP_DIGITS // 2))
    with mpmath.workdps(MP_DIGITS):
        q = Fraction(mpmath.nstr(v, MP_DIGITS, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)).limit_denominator(
            SNAP_DENOMINATOR
        )
        if abs(v - mpmath.mpf(q.numerator) / q.denominator) < tol:
            return Scalar(q)
        for d in fields:
            rel = mpmath.pslq([v, 1, mpmath.sqrt(d)], tol=tol, maxcoeff=10**4, maxsteps=10**5)
            if rel and rel[0] != 0:
                s = Scalar(Fraction(-rel[1], rel[0]), Fraction(-rel[2], rel[0]), d)
                if abs(v - s.to_mpf()) < tol:
                    return s
    return None


def _snap_point(xy, fld: QuadraticField) -> tuple[Point, QuadraticField] | None:
    fields = [fld.d] if fld.d else list(SNAP_FIELDS)
    with mpmath.workdps(MP_DIGITS):
        root = mpmath.sqrt(fld.stretch.to_mpf())
        x = _snap_scalar(xy[0], fields)
        y = _snap_scalar(xy[1] / root, fields)
    if x is None or y is None:
        return None
    d = {s.d for s in (x, y) if s.d}
    if len(d) > 1:
        return None
    try:
        extra = d.pop() if d else 0
        joined = fld if extra in (0, fld.d) else fld.join(QuadraticField(extra))
    except IncompatibleFields:
        return None
    return Point(x, y), joined


# -- main entry ---------------------------------------------------------------------------


def _grid(base_xy: np.ndarray, universe: GridUniverse):
    diam = max(np.linalg.norm(a - b) for a, b in combinations(base_xy, 2))
    lo, hi = base_xy.min(axis=0), base_xy.max(axis=0)
    center = (lo + hi) / 2
    half = universe.box_factor * diam / 2
    step = diam / universe.divisions
    n = int(round(2 * half / step)) + 1
    axis = np.arange(n) * step - half
    gx, gy = np.meshgrid(center[0] + axis, center[1] + axis, indexing="ij")
    return gx, gy, step, diam


def _local_minima(cost: np.ndarray, limit: int, threshold: float) -> list[tuple[int, int]]:
    c = np.where(np.isfinite(cost), cost, np.inf)
    pad = np.pad(c, 1, constant_values=np.inf)
    core = pad[1:-1, 1:-1]
    is_min = np.ones_like(core, dtype=bool)
    for dx in (-1, 0, 1):
        for dy in (-1, 0, 1):
            if dx or dy:
                is_min &= core <= pad[1 + dx : pad.shape[0] - 1 + dx, 1 + dy : pad.shape[1] - 1 + dy]
    is_min &= core < threshold
    idx = np.argwhere(is_min)
    order = np.lexsort((idx[:, 1], idx[:, 0], core[is_min]))
    return [tuple(int(v) for v in idx[i]) for i in order[:limit]]


def extend_search(
    base: Configuration,
    k: int,
    universe: GridUniverse | None = None,
    refine_eps: float = 1e-30,
    certify: bool = True,
    threads: int = 1,
    max_seeds: int = 2000,
    seed_threshold: float = 0.25,
) -> ExtensionResult:
    """Certified points addable to ``base`` with the census staying at most ``k``."""
    universe = universe or GridUniverse()
    if k < 1:
        raise BadParameter("k must be at least 1")
    exact = as_exact(base)
    fld = exact.domain.field
    base_rep = census(exact)
    if base_rep.count > k:
        raise BaseCensusExceedsK(f"base census {base_rep.count} exceeds k={k}")
    base_xy = np.asarray(to_float(exact))
    base_vals = sorted(float(v) for v in base_rep.values)
    gx, gy, step, diam = _grid(base_xy, universe)
    cand = np.ascontiguousarray(np.stack([gx.ravel(), gy.ravel()], axis=1))
    cost = np.asarray(grid_cost(cand, np.ascontiguousarray(base_xy), np.asarray(base_vals, dtype=float), k))
    cost = cost.reshape(gx.shape)
    seeds = _local_minima(cost, max_seeds, seed_threshold)

    def refine(ij):
        p0 = (gx[ij], gy[ij])
        out = _refine_float(base_xy, base_vals, k, p0, diam)
        if out is None:
            return None
        p, targets, free, res = out
        if res > 1e-8 or np.linalg.norm(p - np.array(p0)) > 4 * step:
            return None
        return p, targets, free

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            refined = list(pool.map(refine, seeds))
    else:
        refined = [refine(s) for s in seeds]

    with mpmath.workdps(MP_DIGITS + 10):
        root = mpmath.sqrt(fld.stretch.to_mpf())
        base_mp = [(p.x.to_mpf(), p.y.to_mpf() * root) for p in exact.points]

    hits: list[tuple[float, float]] = []
    certified: list[CertifiedPoint] = []
    uncertified: list[tuple[float, float]] = []
    rejected = 0
    unconverged = 0
    for item in refined:
        if item is None:
            continue
        p, targets, free = item
        if any(np.hypot(*(p - q)) < 1e-6 * diam for q in hits):
            continue
        if any(np.hypot(*(p - q)) < 1e-9 * diam for q in base_xy):
            continue
        hits.append(p)
        xy, res, ok = _refine_mp(base_mp, targets, p, free, refine_eps)
        if not ok:
            unconverged += 1
            continue
        snapped = _snap_point(xy, fld) if certify else None
        if snapped is None:
            uncertified.append((float(xy[0]), float(xy[1])))
            continue
        pt, pfld = snapped
        if pt in exact.points:
            continue
        rep = census(Configuration(QuadraticDomain(pfld), list(exact.points) + [pt]))
        if rep.count <= k:
            if all(c.point != pt for c in certified):
                certified.append(CertifiedPoint(pt, pfld, rep.count))
        else:
            rejected += 1
            uncertified.append((float(xy[0]), float(xy[1])))
    certified.sort(key=lambda c: c.to_float())
    uncertified.sort()
    compat, best_sets, configs = compatibility(exact, certified, k)
    detail = {
        "grid_points": int(cand.shape[0]),
        "grid_step": step,
        "seeds": len(seeds),
        "refined": sum(r is not None for r in refined),
        "distinct_hits": len(hits),
        "unconverged": unconverged,
        "census_rejected": rejected,
    }
    return ExtensionResult(
        exact.name or "base", k, certified, uncertified, compat, best_sets, configs, detail
    )


def _joint(exact: Configuration, pts: list[CertifiedPoint]) -> Configuration:
    fld = exact.domain.field
    for c in pts:
        fld = fld.join(c.field)
    return Configuration(QuadraticDomain(fld), list(exact.points) + [c.point for c in pts])


def compatibility(exact: Configuration, pts: list[CertifiedPoint], k: int):
    """Pairwise compatibility graph and the largest jointly compatible sets."""
    n = len(pts)
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for i, j in combinations(range(n), 2):
        try:
            ok = census(_joint(exact, [pts[i], pts[j]])).count <= k
        except IncompatibleFields:
            ok = False
        if ok:
            adj[i].append(j)
            adj[j].append(i)
    best: list[tuple[int, ...]] = []
    for size in range(n, 0, -1):
        for sub in combinations(range(n), size):
            if any(b not in adj[a] for a, b in combinations(sub, 2)):
                continue
            if size > 2 and census(_joint(exact, [pts[i] for i in sub])).count > k:
                continue
            best.append(sub)
        if best:
            break
    configs = [_joint(exact, [pts[i] for i in s]) for s in best]
    return adj, best, configs


def is_similar_to(cfg: Configuration, other: Configuration) -> bool:
    a, b = as_exact(cfg), as_exact(other)
    return similar_exact(list(a.points), list(b.points), a.domain.field, b.domain.field)
