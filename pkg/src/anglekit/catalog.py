"""Named configurations with declared censuses, the LB(k) family and bounds on P(k)."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import mpmath

from .angles import PiRational
from .config import ConcyclicDomain, Configuration, NumericDomain, QuadraticDomain, ngon_vertices_exact
from .cyclic import CENTER, CyclicPoint
from .errors import BadParameter, UnknownName
from .exact import Point
from .geometry import line_intersection
from .numeric import NumericPoint
from .scalar import QuadraticField, Scalar
from .report import CensusReport, Certification

DECIMAL_DIGITS = 200

_H = Fraction(1, 2)
_SQ3 = QuadraticField(3)


def _pis(*pairs) -> frozenset[PiRational]:
    return frozenset(PiRational(p, q) for p, q in pairs)


SQUARE_ANGLES = _pis((1, 4), (1, 2))
PENTAGON_ANGLES = _pis((1, 5), (2, 5), (3, 5))
RHOMBUS_ANGLES = _pis((1, 6), (1, 3), (2, 3))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple
    config: Configuration
    declared_census: frozenset[PiRational] | None
    source: str
    # census size when the values are not pi-rational (rectangles)
    expected_count: int | None = None
    decimal: Configuration | None = field(default=None, compare=False)

    @property
    def count(self) -> int:
        return len(self.declared_census) if self.declared_census is not None else self.expected_count


def _q(points, declared, name, d: int = 0, fld: QuadraticField | None = None) -> Configuration:
    return Configuration(QuadraticDomain(fld or QuadraticField(d)), [Point(*p) for p in points], declared, name)


def _cyc(n: int, vertices, center: bool, declared, name) -> Configuration:
    pts = ([CENTER] if center else []) + [CyclicPoint.vertex(i) for i in vertices]
    return Configuration(ConcyclicDomain(n), pts, declared, name)


def ngon_census(n: int) -> frozenset[PiRational]:
    return frozenset(PiRational(m, n) for m in range(1, n - 1))


def ngon_center_census(n: int) -> frozenset[PiRational]:
    out = set(ngon_census(n))
    for d in range(1, (n + 1) // 2):
        if 2 * d < n:
            out.add(PiRational(2 * d, n))
            out.add(PiRational(n - 2 * d, 2 * n))
    return frozenset(out)


# -- fixed entries ------------------------------------------------------------------

_R3 = Scalar(0, _H, 3)  # sqrt(3)/2


def _equilateral():
    return _q([(0, 0), (1, 0), (_H, _R3)], _pis((1, 3)), "equilateral", 3)


def _equilateral_center():
    return _q(
        [(0, 0), (1, 0), (_H, _R3), (_H, Scalar(0, Fraction(1, 6), 3))], RHOMBUS_ANGLES, "equilateral_center", 3
    )


def _rhombus():
    return _q([(0, 0), (1, 0), (Fraction(3, 2), _R3), (_H, _R3)], RHOMBUS_ANGLES, "rhombus_1b", 3)


SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
RIGHT_ISOSCELES = [(0, 0), (1, 0), (0, 1)]
# points addable to the right isosceles triangle without a third angle
RIGHT_ISOSCELES_EXTENSIONS = {
    "x1": (_H, _H),  # midpoint of the hypotenuse
    "x2": (1, 1),  # completes the square
    "x3": (0, -1),  # reflection of the leg end through the apex
    "x4": (-1, 0),
}


def _pentagon_points():
    fld, v = ngon_vertices_exact(5)
    return fld, v


def _fig3(name: str):
    fld, v = _pentagon_points()
    if name == "fig3_quad_with_diagonal_point":
        pts = v[:4] + [line_intersection(v[0], v[2], v[1], v[3])]
        src = "pentagon minus a vertex plus the crossing of its diagonals"
    elif name == "fig3_quad_with_ray_intersection":
        pts = v[:4] + [line_intersection(v[0], v[1], v[3], v[2])]
        src = "pentagon minus a vertex plus the meeting point of its two legs"
    else:
        pts = [v[0], v[1], v[2], line_intersection(v[0], v[2], v[1], v[3]), line_intersection(v[0], v[2], v[1], v[4])]
        src = "golden triangle with its apex angle split in three"
    return Configuration(QuadraticDomain(fld), pts, PENTAGON_ANGLES, name), src


@lru_cache(maxsize=None)
def decimal_twin(cfg: Configuration, digits: int = DECIMAL_DIGITS) -> Configuration:
    """Numeric copy with coordinates rounded to ``digits`` significant decimals."""
    fld = cfg.domain.field
    with mpmath.workdps(digits + 20):
        root = mpmath.sqrt(fld.stretch.to_mpf())
        pts = []
        for p in cfg.points:
            x = p.x.to_mpf()
            y = p.y.to_mpf() * root
            pts.append(NumericPoint(_dec(x, digits), _dec(y, digits)))
    return Configuration(NumericDomain(), pts, cfg.declared_census, f"{cfg.name}:decimal")


def _dec(v, digits: int) -> str:
    if v == 0:
        return "0"
    return mpmath.nstr(v, digits, strip_zeros=False, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)


# -- lookup ---------------------------------------------------------------------------

_FIXED: dict[str, Callable[[], tuple[Configuration, str]]] = {
    "equilateral": lambda: (_equilateral(), "P(1) = 3: the equilateral triangle"),
    "square": lambda: (_q(SQUARE, SQUARE_ANGLES, "square"), "four-point optimum when 0 counts"),
    "square_center": lambda: (
        _q(SQUARE + [(_H, _H)], SQUARE_ANGLES, "square_center"),
        "P(2) = 5: square with its center",
    ),
    "rhombus_1b": lambda: (_rhombus(), "three-angle quad family: two attached equilateral triangles"),
    "pentagon_minus_vertex_1c": lambda: (
        _cyc(5, range(4), False, PENTAGON_ANGLES, "pentagon_minus_vertex_1c"),
        "three-angle quad family: four vertices of a regular pentagon",
    ),
    "pentagon": lambda: (_cyc(5, range(5), False, PENTAGON_ANGLES, "pentagon"), "regular pentagon"),
    "equilateral_center": lambda: (_equilateral_center(), "equilateral triangle with its center"),
    "right_isosceles": lambda: (
        _q(RIGHT_ISOSCELES, SQUARE_ANGLES, "right_isosceles"),
        "isosceles right triangle base case for P(2)",
    ),
    **{
        f"right_isosceles_plus_{k}": (
            lambda k=k: (
                _q(RIGHT_ISOSCELES + [RIGHT_ISOSCELES_EXTENSIONS[k]], SQUARE_ANGLES, f"right_isosceles_plus_{k}"),
                f"right isosceles triangle plus addable point {k}",
            )
        )
        for k in RIGHT_ISOSCELES_EXTENSIONS
    },
    **{
        n: (lambda n=n: _fig3(n))
        for n in ("fig3_quad_with_diagonal_point", "fig3_quad_with_ray_intersection", "fig3_fan_2a")
    },
}

FIG3_NAMES = (
    "square_center",
    "pentagon",
    "fig3_quad_with_diagonal_point",
    "fig3_quad_with_ray_intersection",
    "fig3_fan_2a",
)

PARAMETRIC = ("rectangle", "ngon", "ngon_center", "lb")

DEFAULT_PARAMETRIC = ("rectangle:2,1", "ngon:6", "ngon_center:6", "lb:1", "lb:5")

_NAME_RE = re.compile(r"^(?P<base>[a-z0-9_]+)(?:[:(](?P<args>[^)]*)\)?)?$")


def names() -> list[str]:
    return list(_FIXED) + list(DEFAULT_PARAMETRIC)


def _int_args(args: str | None, count: int, name: str) -> list[int]:
    if args is None:
        raise BadParameter(f"{name} needs {count} parameter(s)")
    try:
        vals = [Fraction(a.strip()) for a in args.split(",")]
    except ValueError as exc:
        raise BadParameter(f"bad parameters for {name}: {args}") from exc
    if len(vals) != count:
        raise BadParameter(f"{name} needs {count} parameter(s)")
    return vals


def get(name: str) -> CatalogEntry:
    """Look up a catalog entry; parametric names look like ``lb:5`` or ``rectangle:2,1``."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise UnknownName(name)
    base, args = m["base"], m["args"]
    if base in _FIXED and args is None:
        cfg, src = _FIXED[base]()
        twin = decimal_twin(cfg) if base.startswith("fig3_") else None
        return CatalogEntry(base, (), cfg, cfg.declared_census, src, decimal=twin)
    if base == "rectangle":
        w, h = _int_args(args, 2, base)
        if w <= 0 or h <= 0:
            raise BadParameter("rectangle sides must be positive")
        square = w == h
        cfg = _q([(0, 0), (w, 0), (w, h), (0, h)], SQUARE_ANGLES if square else None, f"rectangle:{w},{h}")
        return CatalogEntry(
            f"rectangle:{w},{h}", (w, h), cfg, cfg.declared_census, "rectangle family", expected_count=2 if square else 3
        )
    if base in ("ngon", "ngon_center", "lb"):
        (v,) = _int_args(args, 1, base)
        if v.denominator != 1:
            raise BadParameter(f"{base} needs an integer")
        v = int(v)
        if base == "lb":
            cfg = lower_bound_config(v)
            return CatalogEntry(f"lb:{v}", (v,), cfg, cfg.declared_census, "regular (2k+2)-gon with its center")
        if v < 3:
            raise BadParameter("n must be at least 3")
        if base == "ngon":
            cfg = _cyc(v, range(v), False, ngon_census(v), f"ngon:{v}")
        else:
            cfg = _cyc(v, range(v), True, ngon_center_census(v), f"ngon_center:{v}")
        return CatalogEntry(cfg.name, (v,), cfg, cfg.declared_census, "regular polygon")
    raise UnknownName(name)


def all_entries() -> list[CatalogEntry]:
    return [get(n) for n in names()]


def lower_bound_config(k: int) -> Configuration:
    """LB(k): the regular (2k+2)-gon with its center, 2k+3 points and 2k angles."""
    if k < 1:
        raise BadParameter("k must be at least 1")
    n = 2 * k + 2
    return _cyc(n, range(n), True, frozenset(PiRational(m, n) for m in range(1, 2 * k + 1)), f"lb:{k}")


# -- bounds -----------------------------------------------------------------------------

EXACT_P = {1: 3, 2: 5, 3: 5}


@dataclass(frozen=True)
class BoundsResult:
    k: int
    lower: int
    upper: int
    exact: int | None = None


def bounds(k: int) -> BoundsResult:
    """Known bounds on P(k): k+2 <= P(k) <= 6k, with 2m+3 <= P(2m) and P(2m+1)."""
    if k < 1:
        raise BadParameter("k must be at least 1")
    lower = max(k + 2, 2 * (k // 2) + 3)
    return BoundsResult(k, lower, 6 * k, EXACT_P.get(k))


def conjectured(k: int) -> int:
    return 2 * (k // 2) + 3


# -- verification -------------------------------------------------------------------------


@dataclass
class VerifyResult:
    name: str
    points: int
    report: CensusReport
    ok: bool
    message: str
    twin: CensusReport | None = None


def verify_config(cfg: Configuration, expected_count: int | None = None, name: str | None = None) -> VerifyResult:
    """Census ``cfg`` and compare with its declared values (or an expected count)."""
    from .census import census, declared_matches

    rep = census(cfg)
    label = name or cfg.name or "configuration"
    if rep.certification is Certification.Unresolved:
        return VerifyResult(label, len(cfg), rep, False, "unresolved at the precision cap")
    if cfg.declared_census is not None:
        ok = declared_matches(cfg, rep)
        if not ok:
            want = ", ".join(str(v) for v in sorted(cfg.declared_census, key=lambda v: v.value))
            got = rep.pi_values()
            got_s = ", ".join(str(v) for v in got) if got is not None else f"{rep.count} values"
            return VerifyResult(label, len(cfg), rep, False, f"declared {{{want}}} but found {{{got_s}}}")
        return VerifyResult(label, len(cfg), rep, True, "matches declared census")
    if expected_count is not None:
        ok = rep.count == expected_count
        msg = "matches expected count" if ok else f"expected {expected_count} angles, found {rep.count}"
        return VerifyResult(label, len(cfg), rep, ok, msg)
    return VerifyResult(label, len(cfg), rep, True, "no declared census")


def verify_entry(entry: CatalogEntry) -> VerifyResult:
    """Verify an entry and, when it has one, its decimal twin at certified precision."""
    res = verify_config(entry.config, entry.expected_count, entry.name)
    if entry.decimal is not None:
        twin = verify_config(entry.decimal, name=entry.name + " (decimal)")
        res.twin = twin.report
        if not twin.ok:
            res.ok = False
            res.message += f"; decimal twin: {twin.message}"
    return res
