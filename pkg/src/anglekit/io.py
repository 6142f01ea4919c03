"""JSON formats: configuration files and versioned reports.

Configuration files (``anglekit-config/1``)::

    {
      "schema": "anglekit-config/1",
      "name": "pentagon",
      "domain": "quadratic" | "concyclic" | "numeric",
      "field": {"d": 5, "stretch": "(5/8 + 1/8*sqrt 5)"},   # quadratic only
      "n": 10,                                              # concyclic only
      "points": [["1/2", "(0 + 1/2*sqrt 3)"], ...]          # or ["C", "V0", ...]
      "declared_census": ["1/5 pi", "2/5 pi"],              # optional
      "meta": {...}                                         # optional
    }

Quadratic coordinates are ``"p/q"`` or ``"(a/b + c/e*sqrt d)"``; numeric
coordinates are exact decimal strings or rationals; concyclic points are
``"C"`` for the center and ``"Vi"`` for vertex ``i``.
"""
from __future__ import annotations

import json
import re
from dataclasses import is_dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import __version__
from .angles import PiRational, parse_pi
from .config import ConcyclicDomain, Configuration, NumericDomain, QuadraticDomain
from .cyclic import CENTER, CyclicPoint
from .errors import AngleKitError, ConfigFormatError
from .exact import ExactAngleKey, Point
from .numeric import BigInterval, NumericPoint
from .render_text import format_value
from .report import CensusReport
from .scalar import ONE, QuadraticField, Scalar, parse_scalar

CONFIG_SCHEMA = "anglekit-config/1"
REPORT_SCHEMA = "anglekit-report/1"

_DECIMAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_VERTEX = re.compile(r"^V(\d+)$")


# -- configurations ---------------------------------------------------------------------


def _numeric_coord(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)
    if isinstance(c, int):
        return str(c)
    if isinstance(c, str):
        return c
    raise ConfigFormatError("numeric point with a computed coordinate cannot be written losslessly")


def config_to_dict(cfg: Configuration) -> dict:
    dom = cfg.domain
    out: dict[str, Any] = {"schema": CONFIG_SCHEMA}
    if cfg.name:
        out["name"] = cfg.name
    out["domain"] = dom.tag
    if isinstance(dom, QuadraticDomain):
        out["field"] = {"d": dom.field.d}
        if dom.field.stretch != ONE:
            out["field"]["stretch"] = str(dom.field.stretch)
        out["points"] = [[str(p.x), str(p.y)] for p in cfg.points]
    elif isinstance(dom, ConcyclicDomain):
        out["n"] = dom.n
        out["points"] = [str(p) for p in cfg.points]
    else:
        out["points"] = [[_numeric_coord(p.x), _numeric_coord(p.y)] for p in cfg.points]
    if cfg.declared_census is not None:
        out["declared_census"] = [v.ascii() for v in sorted(cfg.declared_census, key=lambda v: v.value)]
    if cfg.meta:
        out["meta"] = cfg.meta
    return out


def _field(d: dict) -> QuadraticField:
    raw_field = d.get("field", {"d": 0})
    if isinstance(raw_field, int):
        raw_field = {"d": raw_field}
    try:
        stretch = parse_scalar(str(raw_field["stretch"])) if "stretch" in raw_field else ONE
        return QuadraticField(int(raw_field.get("d", 0)), stretch)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigFormatError(f"bad field {raw_field!r}: {exc}") from exc


def _pair(p, what: str) -> tuple[str, str]:
    if not isinstance(p, (list, tuple)) or len(p) != 2:
        raise ConfigFormatError(f"{what} must be a pair of coordinates, got {p!r}")
    return str(p[0]).strip(), str(p[1]).strip()


def _numeric_point(p) -> NumericPoint:
    coords = []
    for c in _pair(p, "numeric point"):
        if _RATIONAL.match(c):
            coords.append(Fraction(c))
        elif _DECIMAL.match(c):
            coords.append(c)
        else:
            raise ConfigFormatError(f"bad decimal coordinate {c!r}")
    return NumericPoint(*coords)


def _cyclic_point(p, n: int) -> CyclicPoint:
    s = str(p).strip()
    if s in ("C", "center"):
        return CENTER
    m = _VERTEX.match(s)
    if m is None and s.isdigit():
        m = re.match(r"(\d+)", s)
    if m is None:
        raise ConfigFormatError(f"bad concyclic point {p!r}; use 'C' or 'V<i>'")
    i = int(m.group(1))
    if i >= n:
        raise ConfigFormatError(f"vertex {i} out of range for n={n}")
    return CyclicPoint.vertex(i)


def config_from_dict(d: dict) -> Configuration:
    """Build a configuration; raises ConfigFormatError or the validation error."""
    if not isinstance(d, dict):
        raise ConfigFormatError("configuration must be a JSON object")
    schema = d.get("schema", CONFIG_SCHEMA)
    if schema != CONFIG_SCHEMA:
        raise ConfigFormatError(f"unsupported schema {schema!r}")
    kind = d.get("domain", "quadratic")
    raw = d.get("points")
    if not isinstance(raw, list):
        raise ConfigFormatError("'points' must be a list")
    try:
        if kind == "quadratic":
            fld = _field(d)
            dom = QuadraticDomain(fld)
            pts = [Point(*(parse_scalar(c) for c in _pair(p, "point"))) for p in raw]
        elif kind == "concyclic":
            n = int(d["n"])
            dom = ConcyclicDomain(n)
            pts = [_cyclic_point(p, n) for p in raw]
        elif kind == "numeric":
            dom = NumericDomain()
            pts = [_numeric_point(p) for p in raw]
        else:
            raise ConfigFormatError(f"unknown domain {kind!r}")
        declared = d.get("declared_census")
        if declared is not None:
            declared = frozenset(parse_pi(str(v)) for v in declared)
    except ConfigFormatError:
        raise
    except AngleKitError as exc:
        if isinstance(exc, ValueError):
            raise ConfigFormatError(str(exc)) from exc
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigFormatError(str(exc)) from exc
    return Configuration(dom, pts, declared, d.get("name"), dict(d.get("meta", {})))


def dumps_config(cfg: Configuration) -> str:
    return json.dumps(config_to_dict(cfg), indent=2) + "\n"


def loads_config(text: str) -> Configuration:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigFormatError(f"invalid JSON: {exc}") from exc
    return config_from_dict(data)


def load_config(path: str | Path) -> Configuration:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigFormatError(f"cannot read {path}: {exc}") from exc
    return loads_config(text)


def save_config(cfg: Configuration, path: str | Path) -> None:
    Path(path).write_text(dumps_config(cfg))


# -- reports ------------------------------------------------------------------------------


def value_to_dict(v) -> dict:
    """One census value: exact pi-rational when known, else a 50-digit decimal."""
    pr = v if isinstance(v, PiRational) else None
    if pr is None and isinstance(v, ExactAngleKey):
        pr = v.pi_rational()
    if pr is not None:
        return {"exact": pr.ascii(), "display": str(pr)}
    out = {"decimal": format_value(v)}
    if isinstance(v, ExactAngleKey):
        out["cot_numerator"] = str(v.t)
        out["cot_denominator"] = str(v.c)
        if v.stretch != ONE:
            out["stretch"] = str(v.stretch)
    elif isinstance(v, BigInterval):
        out["radius"] = float(v.ball.rad())
        out["precision_bits"] = v.precision_bits
    return out


def census_to_dict(rep: CensusReport) -> dict:
    return {
        "mode": rep.mode.value,
        "count": list(rep.count) if isinstance(rep.count, tuple) else rep.count,
        "certification": rep.certification.value,
        "values": [value_to_dict(v) for v in rep.values],
        "witnesses": [list(w) for w in rep.witnesses],
        "detail": jsonable(rep.detail),
    }


def jsonable(obj):
    """Plain JSON data from dataclasses, enums, exact numbers and numpy scalars."""
    import enum

    import numpy as np

    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (PiRational, ExactAngleKey, BigInterval)):
        return value_to_dict(obj)
    if isinstance(obj, CensusReport):
        return census_to_dict(obj)
    if isinstance(obj, Configuration):
        return config_to_dict(obj)
    if isinstance(obj, (Scalar, Fraction, CyclicPoint)):
        return str(obj)
    if isinstance(obj, Point):
        return [str(obj.x), str(obj.y)]
    if isinstance(obj, QuadraticField):
        return {"d": obj.d, "stretch": str(obj.stretch)}
    if is_dataclass(obj):
        return {f: jsonable(getattr(obj, f)) for f in obj.__dataclass_fields__ if not f.startswith("_")}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in obj]
        return sorted(items, key=json.dumps) if isinstance(obj, (set, frozenset)) else items
    return str(obj)


def report(command: str, parameters: dict, payload, seed: int | None = None) -> dict:
    """Envelope shared by every command's JSON output."""
    out = {
        "schema": REPORT_SCHEMA,
        "tool_version": __version__,
        "command": command,
        "parameters": jsonable(parameters),
    }
    if seed is not None:
        out["seed"] = seed
    out["result"] = jsonable(payload)
    return out


def dumps_report(rep: dict) -> str:
    return json.dumps(rep, indent=2, sort_keys=False) + "\n"


def write_report(rep: dict, path: str | Path) -> None:
    Path(path).write_text(dumps_report(rep))


__all__ = [
    "CONFIG_SCHEMA",
    "REPORT_SCHEMA",
    "census_to_dict",
    "config_from_dict",
    "config_to_dict",
    "dumps_config",
    "dumps_report",
    "jsonable",
    "load_config",
    "loads_config",
    "report",
    "save_config",
    "value_to_dict",
    "write_report",
]
