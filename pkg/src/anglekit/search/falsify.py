"""Randomized attempt to find a convex quadrilateral with three angles outside the known families.

Each trial starts from a random convex quadrilateral, minimizes a smoothed
"distance to three angle values" objective, polishes with Gauss-Newton, and
checks any convergent that reaches at most three values against the
rectangle, twin-equilateral rhombus and pentagon-minus-vertex shapes.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import least_squares, minimize, minimize_scalar

from ..errors import BadParameter
from ..geometry import set_similarity_distance

TRIPLES = [(i, j, l) for j in range(4) for i in range(4) for l in range(i + 1, 4) if j not in (i, l)]
_I, _J, _L = (np.array(t) for t in zip(*TRIPLES))
_ROWS = np.arange(len(TRIPLES))

RHOMBUS = np.array([[0.0, 0.0], [1.0, 0.0], [1.5, math.sqrt(3) / 2], [0.5, math.sqrt(3) / 2]])
PENTAGON4 = np.array([[math.cos(2 * math.pi * i / 5), math.sin(2 * math.pi * i / 5)] for i in range(4)])


@dataclass
class Counterexample:
    trial: int
    points: list[list[float]]
    angles: list[float]
    distances: dict[str, float]


@dataclass
class FalsificationReport:
    trials: int
    seed: int
    tol: float
    families: dict[str, int]
    converged: int
    stuck: int
    degenerate: int
    nonconvex: int
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def quad_angles(xy: np.ndarray) -> np.ndarray:
    """The twelve vertex angles of four points, vectorized."""
    u = xy[_I] - xy[_J]
    v = xy[_L] - xy[_J]
    cross = u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]
    dot = (u * v).sum(axis=1)
    return np.arctan2(np.abs(cross), dot)


def quad_angle_jacobian(xy: np.ndarray) -> np.ndarray:
    """d(angle)/d(point): array of shape (12, 4, 2)."""
    u = xy[_I] - xy[_J]
    v = xy[_L] - xy[_J]
    cross = u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]
    sg = np.where(cross >= 0, 1.0, -1.0)[:, None]
    c = np.abs(cross)[:, None]
    d = (u * v).sum(axis=1)[:, None]
    den = c * c + d * d
    # d|cross|/du is the signed perpendicular of v, and likewise for v
    g_u = (d * sg * v[:, ::-1] * (1, -1) - c * v) / den
    g_v = (d * sg * u[:, ::-1] * (-1, 1) - c * u) / den
    jac = np.zeros((len(TRIPLES), 4, 2))
    jac[_ROWS, _I] = g_u
    jac[_ROWS, _L] = g_v
    jac[_ROWS, _J] = -(g_u + g_v)
    return jac


def cluster_values(angles: np.ndarray, tol: float) -> list[list[int]]:
    """Single-linkage clusters of sorted angles, cut at gaps wider than ``tol``."""
    order = np.argsort(angles)
    groups = [[int(order[0])]]
    for a, b in zip(order, order[1:]):
        if angles[b] - angles[a] > tol:
            groups.append([])
        groups[-1].append(int(b))
    return groups


def random_convex_quad(rng: np.random.Generator) -> np.ndarray:
    while True:
        theta = np.sort(rng.uniform(0, 2 * math.pi, 4))
        r = rng.uniform(0.5, 1.5, 4)
        xy = np.stack([r * np.cos(theta), r * np.sin(theta)], axis=1)
        if is_convex(xy) and _min_sine(xy) > 0.05:
            return xy


def is_convex(xy: np.ndarray) -> bool:
    c = xy.mean(axis=0)
    q = xy[np.argsort(np.arctan2(xy[:, 1] - c[1], xy[:, 0] - c[0]))]
    cr = []
    for i in range(4):
        a, b, d = q[i], q[(i + 1) % 4], q[(i + 2) % 4]
        cr.append((b[0] - a[0]) * (d[1] - b[1]) - (b[1] - a[1]) * (d[0] - b[0]))
    return all(x > 0 for x in cr) or all(x < 0 for x in cr)


def _min_sine(xy: np.ndarray) -> float:
    a = quad_angles(xy)
    return float(np.min(np.sin(a)))


def _unpack(x: np.ndarray) -> np.ndarray:
    # the first two vertices are pinned at (0,0) and (1,0) to remove similarity freedom
    return np.array([[0.0, 0.0], [1.0, 0.0], x[0:2], x[2:4]])


def _normalize(xy: np.ndarray) -> np.ndarray:
    p, q = xy[0], xy[1]
    d = q - p
    s = complex(d[0], d[1])
    z = (xy[:, 0] + 1j * xy[:, 1] - complex(p[0], p[1])) / s
    return np.stack([z.real, z.imag], axis=1)


def _softmin_objective(x: np.ndarray, tau: float):
    """Sum over angles of a smoothed min of squared distances to three centers, with gradient."""
    xy = _unpack(x[:4])
    a = quad_angles(xy)
    diff = a[:, None] - x[None, 4:]
    d2 = diff**2
    m = d2.min(axis=1)
    e = np.exp(-(d2 - m[:, None]) / tau)
    z = e.sum(axis=1)
    value = float(np.sum(m - tau * np.log(z)))
    w = e / z[:, None]
    g_a = 2 * (w * diff).sum(axis=1)
    g_c = -2 * (w * diff).sum(axis=0)
    g_xy = np.einsum("r,rpk->pk", g_a, quad_angle_jacobian(xy))
    return value, np.concatenate([g_xy[2:].ravel(), g_c])


def _polish(x: np.ndarray) -> np.ndarray:
    """Gauss-Newton on the hard assignment of each angle to its nearest center."""
    xy = _unpack(x[:4])
    a = quad_angles(xy)
    assign = np.argmin(np.abs(a[:, None] - x[None, 4:]), axis=1)

    def fun(v):
        return quad_angles(_unpack(v[:4])) - v[4:][assign]

    onehot = -np.eye(3)[assign]

    def jac(v):
        jxy = quad_angle_jacobian(_unpack(v[:4]))[:, 2:, :].reshape(len(TRIPLES), 4)
        return np.hstack([jxy, onehot])

    try:
        sol = least_squares(fun, x, jac=jac, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=200)
    except ValueError:
        return x
    return sol.x


def _rectangle(t: float) -> np.ndarray:
    c, s = math.cos(t), math.sin(t)
    return np.array([[c, s], [-c, s], [-c, -s], [c, -s]])


def family_distances(xy: np.ndarray) -> dict[str, float]:
    """Similarity distance from a quadrilateral to each family (reflections allowed)."""
    # nearest rectangle: aspect from the mean lengths of opposite hull sides, then refined
    c = xy.mean(axis=0)
    ring = xy[np.argsort(np.arctan2(xy[:, 1] - c[1], xy[:, 0] - c[0]))]
    sides = np.linalg.norm(ring - np.roll(ring, -1, axis=0), axis=1)
    t0 = math.atan2(sides[1] + sides[3], sides[0] + sides[2])
    res = minimize_scalar(
        lambda t: set_similarity_distance(xy, _rectangle(t)),
        bounds=(max(1e-6, t0 - 0.1), min(math.pi / 2 - 1e-6, t0 + 0.1)),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return {
        "rectangle": float(min(res.fun, set_similarity_distance(xy, _rectangle(t0)))),
        "twin-equilateral": set_similarity_distance(xy, RHOMBUS),
        "pentagon-minus-vertex": set_similarity_distance(xy, PENTAGON4),
    }


def run_trial(rng: np.random.Generator, tol: float, start: np.ndarray | None = None):
    """One trial; returns (outcome, detail) where outcome names a bucket.

    ``start`` overrides the random initial quadrilateral.
    """
    start = _normalize(random_convex_quad(rng) if start is None else np.asarray(start, dtype=float))
    a0 = np.sort(quad_angles(start))
    x = np.concatenate([start[2:].ravel(), np.quantile(a0, [1 / 6, 1 / 2, 5 / 6])])
    for tau in (1e-2, 1e-4):
        x = minimize(_softmin_objective, x, args=(tau,), jac=True, method="L-BFGS-B", options={"gtol": 1e-9}).x
    x = _polish(x)
    xy = _unpack(x[:4])
    if not np.all(np.isfinite(xy)):
        return "degenerate", None
    if _min_sine(xy) < 1e-6 or min(
        np.linalg.norm(xy[i] - xy[j]) for i in range(4) for j in range(i + 1, 4)
    ) < 1e-6:
        return "degenerate", None
    ang = quad_angles(xy)
    if len(cluster_values(ang, tol)) > 3:
        return "stuck", None
    if not is_convex(xy):
        return "nonconvex", None
    dist = family_distances(xy)
    fam, d = min(dist.items(), key=lambda kv: kv[1])
    if d <= tol:
        return fam, None
    return "counterexample", (xy, ang, dist)


def falsify_quad_lemma(trials: int, seed: int, tol: float = 1e-6) -> FalsificationReport:
    """Look for convex quadrilaterals with at most three angles that are in none of the families."""
    if trials < 1:
        raise BadParameter("trials must be at least 1")
    children = np.random.SeedSequence(seed).spawn(trials)
    buckets: Counter = Counter()
    found = []
    for i, child in enumerate(children):
        outcome, info = run_trial(np.random.default_rng(child), tol)
        buckets[outcome] += 1
        if info is not None:
            xy, ang, dist = info
            found.append(Counterexample(i, xy.tolist(), sorted(ang.tolist()), dist))
    fams = {f: buckets[f] for f in ("rectangle", "twin-equilateral", "pentagon-minus-vertex")}
    return FalsificationReport(
        trials,
        seed,
        tol,
        fams,
        converged=sum(fams.values()) + buckets["counterexample"],
        stuck=buckets["stuck"],
        degenerate=buckets["degenerate"],
        nonconvex=buckets["nonconvex"],
        counterexamples=found,
    )
