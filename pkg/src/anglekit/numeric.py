"""Certified ball-arithmetic angle evaluation with a precision ladder.

Angles are enclosed in rigorous arb balls.  Two angles are reported as
distinct only when their balls are disjoint.  Balls that still overlap at
the top of the ladder are not merged; the census is then Unresolved with a
count range.  Equalities are certified only by matching against known exact
values (``match_expected``).
"""
from __future__ import annotations

import enum
import re
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Sequence, Union

from flint import arb, ctx

from .angles import ZERO_ANGLE, Degenerate, Mode, PiRational
from .errors import PrecisionExhausted, TooFewPoints
from .report import CensusReport, Certification

DEFAULT_SCHEDULE = (128, 256, 512, 1024, 2048, 4096)
CERTIFY_BITS = 512

Coordinate = Union[str, int, Fraction, Callable[[int], arb]]


@contextmanager
def working_precision(bits: int):
    old = ctx.prec
    ctx.prec = bits
    try:
        yield
    finally:
        ctx.prec = old


_RATIONAL = re.compile(r"^\s*[+-]?\d+(/\d+)?\s*$")


def _normalize(v: Coordinate) -> Coordinate:
    # integer and p/q strings become Fractions so equal points compare equal
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    if isinstance(v, str) and _RATIONAL.match(v):
        return Fraction(v.strip())
    return v


def _to_arb(v: Coordinate, bits: int) -> arb:
    if callable(v):
        return v(bits)
    if isinstance(v, Fraction):
        return arb(v.numerator) / v.denominator
    if isinstance(v, int):
        return arb(v)
    return arb(str(v))


@dataclass(frozen=True)
class NumericPoint:
    """A point whose coordinates can be enclosed at any requested precision.

    Each coordinate is an exact decimal string, a rational, or a callable
    ``bits -> arb`` (an expression handle).
    """

    x: Coordinate
    y: Coordinate

    def __post_init__(self):
        object.__setattr__(self, "x", _normalize(self.x))
        object.__setattr__(self, "y", _normalize(self.y))

    def evaluate(self, bits: int) -> tuple[arb, arb]:
        with working_precision(bits):
            return _to_arb(self.x, bits), _to_arb(self.y, bits)

    def __float__(self):  # pragma: no cover - convenience only
        raise TypeError("use to_float()")

    def to_float(self) -> tuple[float, float]:
        x, y = self.evaluate(64)
        return float(x.mid()), float(y.mid())

    @classmethod
    def from_decimal(cls, x: str, y: str) -> "NumericPoint":
        return cls(str(x), str(y))


@dataclass(frozen=True)
class BigInterval:
    """Closed interval [lo, hi] enclosing an angle, computed at ``precision_bits``."""

    ball: arb
    precision_bits: int

    @property
    def lo(self) -> arb:
        return self.ball.lower()

    @property
    def hi(self) -> arb:
        return self.ball.upper()

    @property
    def width(self) -> arb:
        return 2 * self.ball.rad()

    def contains(self, value) -> bool:
        with working_precision(self.precision_bits + 32):
            v = value.to_arb() if hasattr(value, "to_arb") else arb(value)
            return bool(self.ball.overlaps(v))

    def overlaps(self, other: "BigInterval") -> bool:
        return bool(self.ball.overlaps(other.ball))

    def contains_interval(self, other: "BigInterval") -> bool:
        return bool(self.lo <= other.lo and other.hi <= self.hi)

    def hull(self, other: "BigInterval") -> "BigInterval":
        return BigInterval(self.ball.union(other.ball), min(self.precision_bits, other.precision_bits))

    def __float__(self):
        return float(self.ball.mid())

    def to_arb(self) -> arb:
        return self.ball

    def pi_rational(self):
        return None

    def __str__(self):
        return self.ball.str(20, radius=True)


class Kind(enum.Enum):
    Proper = "proper"
    Zero = "zero"
    Pi = "pi"
    Near = "near-degenerate"  # cross product not separated from 0
    Undefined = "undefined"  # two of the points not separated


@dataclass
class _Triple:
    ijk: tuple[int, int, int]
    kind: Kind = Kind.Undefined
    ball: arb | None = None
    bits: int = 0


def _classify(pa, pb, pc) -> tuple[Kind, arb | None]:
    ux, uy = pa[0] - pb[0], pa[1] - pb[1]
    vx, vy = pc[0] - pb[0], pc[1] - pb[1]
    wx, wy = pa[0] - pc[0], pa[1] - pc[1]
    for dx, dy in ((ux, uy), (vx, vy), (wx, wy)):
        if (dx * dx + dy * dy).contains(0):
            return Kind.Undefined, None
    cross = ux * vy - uy * vx
    dot = ux * vx + uy * vy
    if cross.is_zero():
        return (Kind.Zero if dot > 0 else Kind.Pi), None
    if cross.contains(0):
        # keep the enclosure tight on the far side of the atan2 branch cut
        if dot < 0:
            return Kind.Near, arb.pi() - arb.atan2(abs(cross), -dot)
        return Kind.Near, arb.atan2(abs(cross), dot)
    return Kind.Proper, arb.atan2(abs(cross), dot)


def angle_interval(a: NumericPoint, b: NumericPoint, c: NumericPoint, precision_bits: int = 128):
    """Enclosure of the angle at ``b``; ``Degenerate`` for exactly collinear input."""
    with working_precision(precision_bits):
        kind, ball = _classify(a.evaluate(precision_bits), b.evaluate(precision_bits), c.evaluate(precision_bits))
    if kind is Kind.Zero:
        return Degenerate.Zero
    if kind is Kind.Pi:
        return Degenerate.Pi
    if kind is not Kind.Proper:
        raise PrecisionExhausted(f"{kind.value} triple at {precision_bits} bits")
    return BigInterval(ball, precision_bits)


def _components(items: list[_Triple]) -> list[list[_Triple]]:
    """Connected components of the interval-overlap graph."""
    if not items:
        return []
    order = sorted(items, key=lambda t: t.ball.lower())
    comps, cur = [], [order[0]]
    reach = order[0].ball.upper()
    for t in order[1:]:
        if t.ball.lower() <= reach:
            cur.append(t)
            if t.ball.upper() > reach:
                reach = t.ball.upper()
        else:
            comps.append(cur)
            cur = [t]
            reach = t.ball.upper()
    comps.append(cur)
    return comps


def _is_clique(comp: list[_Triple]) -> bool:
    return bool(max(t.ball.lower() for t in comp) <= min(t.ball.upper() for t in comp))


def _max_disjoint(comp: list[_Triple]) -> int:
    n, reach = 0, None
    for t in sorted(comp, key=lambda t: t.ball.upper()):
        if reach is None or t.ball.lower() > reach:
            n += 1
            reach = t.ball.upper()
    return n


def _hull(group: Sequence[_Triple]) -> arb:
    with working_precision(max(t.bits for t in group) + 64):
        h = group[0].ball
        for t in group[1:]:
            h = h.union(t.ball)
        return h


def _touches_boundary(ball: arb, pi: arb) -> bool:
    return bool(ball.contains(0) or ball.overlaps(pi))


def _evaluate(points, triples: Iterable[_Triple], bits: int):
    cache = {}
    with working_precision(bits):
        pi = arb.pi()
        for t in triples:
            i, j, k = t.ijk
            for q in (i, j, k):
                if q not in cache:
                    cache[q] = points[q].evaluate(bits)
            t.kind, t.ball = _classify(cache[i], cache[j], cache[k])
            if t.kind is Kind.Proper and (t.ball.overlaps(pi) or t.ball.contains(0)):
                t.kind = Kind.Near
            t.bits = bits


def all_triples(npts: int) -> list[tuple[int, int, int]]:
    return [(i, j, k) for j in range(npts) for i in range(npts) for k in range(i + 1, npts) if j not in (i, k)]


@dataclass
class ClusterState:
    triples: list[_Triple]
    clusters: list[list[_Triple]] = field(default_factory=list)
    unsettled: list[_Triple] = field(default_factory=list)
    chains: list[list[_Triple]] = field(default_factory=list)


def _settle(state: ClusterState, final: bool):
    proper = [t for t in state.triples if t.kind is Kind.Proper]
    state.clusters, state.chains, state.unsettled = [], [], []
    for comp in _components(proper):
        if len(comp) == 1:
            state.clusters.append(comp)
        elif final:
            state.chains.append(comp)
        else:
            state.unsettled.extend(comp)
    if not final:
        state.unsettled.extend(t for t in state.triples if t.kind in (Kind.Near, Kind.Undefined))


def cluster_census(
    points: Sequence[NumericPoint],
    mode: Mode = Mode.ExcludeZero,
    schedule: Sequence[int] = DEFAULT_SCHEDULE,
) -> CensusReport:
    """Numeric census with certified separation of distinct angles.

    Overlaps that survive the whole ladder are never merged: the count
    becomes a range whose low end counts only certainly distinct values.
    """
    if len(points) < 3:
        raise TooFewPoints("need at least 3 points")
    schedule = sorted(schedule)
    cap = schedule[-1]
    triples = [_Triple(ijk) for ijk in all_triples(len(points))]
    _evaluate(points, triples, schedule[0])
    state = ClusterState(triples)
    reached = schedule[0]
    for step, bits in enumerate(schedule):
        if step:
            _evaluate(points, state.unsettled, bits)
            reached = bits
        _settle(state, final=False)
        if not state.unsettled:
            break
    if state.unsettled:
        _settle(state, final=True)

    include_zero = mode is Mode.IncludeZero
    undefined = [t for t in triples if t.kind is Kind.Undefined]
    near = [t for t in triples if t.kind is Kind.Near]
    zero_hit = next((t for t in triples if t.kind is Kind.Zero), None)
    with working_precision(cap):
        groups = state.clusters + state.chains
        groups.sort(key=lambda g: g[0].ball.mid())
    values, witnesses = [], []
    if include_zero and zero_hit is not None:
        values.append(ZERO_ANGLE)
        witnesses.append(zero_hit.ijk)
    for g in groups:
        values.append(BigInterval(_hull(g), min(t.bits for t in g)))
        witnesses.append(min(t.ijk for t in g))
    # every unsettled triple might still be a value of its own
    lo = len(values) + sum(_max_disjoint(c) - 1 for c in state.chains)
    hi = len(values) + sum(len(c) - 1 for c in state.chains) + len(undefined) + len(near)
    if include_zero and zero_hit is None and (undefined or near):
        hi += 1
    unresolved = hi > lo
    if state.chains and not unresolved:  # pragma: no cover - chains always widen the range
        unresolved = True
    detail = {
        "precision_bits": cap if unresolved else reached,
        "separation_floor_bits": cap - 64,
        "near_degenerate_triples": len(near),
        "undefined_triples": len(undefined),
        "overlapping_clusters": len(state.chains),
    }
    return CensusReport(
        mode=mode,
        count=(lo, hi) if unresolved else lo,
        values=values,
        witnesses=witnesses,
        certification=Certification.Unresolved if unresolved else Certification.CertifiedNumeric,
        detail=detail,
        points=list(points),
    )


def _is_zero(v) -> bool:
    return isinstance(v, PiRational) and v.is_zero


@dataclass
class MatchResult:
    certified: bool
    detail: str = ""
    report: CensusReport | None = None

    def __bool__(self):
        return self.certified


def match_expected(
    report: CensusReport, expected: Iterable[PiRational], precision_bits: int = CERTIFY_BITS
) -> MatchResult:
    """Certify that every angle of the report's points encloses one expected value.

    Expected values are pi-rationals or exact angle keys (anything with
    ``to_arb``).

    Degenerate angles (0 and pi) may enclose the boundary instead; in
    include-zero mode 0 must then be among ``expected``.
    """
    if report.points is None:
        return MatchResult(False, "report carries no numeric points")
    pts = report.points
    exp = sorted(set(expected), key=float)
    include_zero = report.mode is Mode.IncludeZero
    triples = [_Triple(ijk) for ijk in all_triples(len(pts))]
    _evaluate(pts, triples, precision_bits)
    with working_precision(precision_bits + 32):
        targets = [(v, v.to_arb()) for v in exp if not _is_zero(v)]
        pi = arb.pi()
    members: dict[PiRational, list[_Triple]] = {v: [] for v in exp}
    zero_seen = False
    for t in triples:
        if t.kind is Kind.Undefined:
            return MatchResult(False, f"triple {t.ijk} has unseparated points at {precision_bits} bits")
        if t.kind is Kind.Pi:
            continue
        if t.kind is Kind.Zero:
            zero_seen = True
            continue
        hits = [v for v, a in targets if t.ball.overlaps(a)]
        boundary = []
        if t.ball.contains(0):
            boundary.append("0")
        if t.ball.overlaps(pi):
            boundary.append("pi")
        if len(hits) + len(boundary) != 1:
            return MatchResult(
                False,
                f"triple {t.ijk} angle {t.ball.str(12)} matches {[str(h) for h in hits] + boundary}",
            )
        if boundary:
            if boundary[0] == "0":
                zero_seen = True
            continue
        members[hits[0]].append(t)
    if include_zero and ZERO_ANGLE in members:
        if not zero_seen:
            return MatchResult(False, "expected 0 but no collinear triple places two points on one side")
        members.pop(ZERO_ANGLE)
    elif include_zero and zero_seen:
        return MatchResult(False, "0 angle present but not expected")
    missing = [str(v) for v, m in members.items() if not m]
    if missing:
        return MatchResult(False, f"expected values never realized: {missing}")
    # cluster hulls must be pairwise disjoint
    hulls = []
    for v, m in members.items():
        hulls.append((v, _hull(m)))
    for (v1, h1), (v2, h2) in combinations(hulls, 2):
        if h1.overlaps(h2):
            return MatchResult(False, f"clusters for {v1} and {v2} overlap")
    values = exp
    witnesses = []
    for v in values:
        if _is_zero(v):
            z = next(t for t in triples if t.kind is Kind.Zero or (t.kind is Kind.Near and t.ball.contains(0)))
            witnesses.append(z.ijk)
        else:
            witnesses.append(min(t.ijk for t in members[v]))
    certified = CensusReport(
        mode=report.mode,
        count=len(values),
        values=values,
        witnesses=witnesses,
        certification=Certification.CertifiedNumeric,
        detail={**report.detail, "certified_bits": precision_bits},
        points=pts,
    )
    return MatchResult(True, "", certified)
