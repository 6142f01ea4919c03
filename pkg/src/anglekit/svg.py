"""Deterministic SVG drawings of configurations."""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .census import census
from .config import Configuration, to_float
from .render_text import format_value

CANVAS = 600
MARGIN = 0.10
POINT_RADIUS = 5
ARC_COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _layout(xy: list[tuple[float, float]]):
    xs = [p[0] for p in xy]
    ys = [p[1] for p in xy]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    inner = CANVAS * (1 - 2 * MARGIN)
    scale = inner / span
    cx = (max(xs) + min(xs)) / 2
    cy = (max(ys) + min(ys)) / 2

    def to_screen(p):
        # screen y grows downward
        return CANVAS / 2 + (p[0] - cx) * scale, CANVAS / 2 - (p[1] - cy) * scale

    return [to_screen(p) for p in xy]


def _arc(a, b, c, radius: float):
    """Path for the angle at ``b`` from ray ``ba`` to ray ``bc``, plus the label anchor."""
    t1 = math.atan2(a[1] - b[1], a[0] - b[0])
    t2 = math.atan2(c[1] - b[1], c[0] - b[0])
    delta = (t2 - t1 + math.pi) % (2 * math.pi) - math.pi
    sweep = 1 if delta > 0 else 0
    p1 = (b[0] + radius * math.cos(t1), b[1] + radius * math.sin(t1))
    p2 = (b[0] + radius * math.cos(t1 + delta), b[1] + radius * math.sin(t1 + delta))
    path = (
        f"M {_fmt(p1[0])} {_fmt(p1[1])} "
        f"A {_fmt(radius)} {_fmt(radius)} 0 0 {sweep} {_fmt(p2[0])} {_fmt(p2[1])}"
    )
    mid = t1 + delta / 2
    label = (b[0] + (radius + 14) * math.cos(mid), b[1] + (radius + 14) * math.sin(mid))
    return path, label


def render_svg(cfg: Configuration, annotate_angles: bool = False, title: str | None = None) -> str:
    """SVG 1.1 text: points as filled circles and, optionally, one labeled arc per distinct angle."""
    screen = _layout(to_float(cfg))
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
        f"<title>{escape(title or cfg.name or 'configuration')}</title>",
        f'<rect x="0" y="0" width="{CANVAS}" height="{CANVAS}" fill="white"/>',
    ]
    if annotate_angles:
        rep = census(cfg)
        lines.append('<g id="angles" fill="none" stroke-width="1.5">')
        labels = []
        for i, (value, (a, j, c)) in enumerate(zip(rep.values, rep.witnesses)):
            color = ARC_COLORS[i % len(ARC_COLORS)]
            pa, pb, pc = screen[a], screen[j], screen[c]
            shortest = min(math.dist(pa, pb), math.dist(pc, pb))
            path, (lx, ly) = _arc(pa, pb, pc, min(40.0, 0.3 * shortest) + 16 * i)
            lines.append(f'<line x1="{_fmt(pb[0])}" y1="{_fmt(pb[1])}" x2="{_fmt(pa[0])}" y2="{_fmt(pa[1])}" stroke="{color}" stroke-opacity="0.35"/>')
            lines.append(f'<line x1="{_fmt(pb[0])}" y1="{_fmt(pb[1])}" x2="{_fmt(pc[0])}" y2="{_fmt(pc[1])}" stroke="{color}" stroke-opacity="0.35"/>')
            lines.append(f'<path d="{path}" stroke="{color}"/>')
            labels.append(
                f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" fill="{color}" font-family="sans-serif" font-size="13" '
                f'text-anchor="middle" dominant-baseline="middle">{escape(format_value(value, 6))}</text>'
            )
        lines.append("</g>")
        lines.append('<g id="labels">')
        lines.extend(labels)
        lines.append("</g>")
    lines.append('<g id="points" fill="black">')
    for x, y in screen:
        lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{POINT_RADIUS}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
