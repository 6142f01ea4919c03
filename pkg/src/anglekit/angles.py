"""Exact angle values: rational multiples of pi and degenerate markers."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadParameter


class Mode(enum.Enum):
    """Whether the census counts the 0 angle of collinear triples (pi never counts)."""

    ExcludeZero = "exclude-zero"
    IncludeZero = "include-zero"


class Degenerate(enum.Enum):
    """Collinear triples: angle 0 (both ends on one side) or pi (vertex between)."""

    Zero = "zero"
    Pi = "pi"


@dataclass(frozen=True, order=True)
class PiRational:
    """The angle ``(num/den)*pi``, stored reduced."""

    value: Fraction

    def __init__(self, num, den: int = 1):
        q = Fraction(num, den) if not isinstance(num, Fraction) else num / den
        if q < 0 or q > 1:
            raise BadParameter(f"angle {q}*pi outside [0, pi]")
        object.__setattr__(self, "value", q)

    @property
    def num(self) -> int:
        return self.value.numerator

    @property
    def den(self) -> int:
        return self.value.denominator

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __float__(self):
        import math

        return float(self.value) * math.pi

    def to_arb(self):
        from flint import arb

        return arb.pi() * self.num / self.den

    def to_mpf(self):
        import mpmath

        return mpmath.pi * self.num / self.den

    def __str__(self):
        return format_pi(self.value)

    def __repr__(self):
        return f"PiRational({self.num}/{self.den})"

    def ascii(self) -> str:
        """``"p/q pi"`` form used in JSON files."""
        return f"{self.num}/{self.den} pi" if self.den != 1 else f"{self.num} pi"


def format_pi(q: Fraction) -> str:
    if q == 0:
        return "0"
    p, r = q.numerator, q.denominator
    head = "π" if p == 1 else f"{p}π"
    return head if r == 1 else f"{head}/{r}"


ZERO_ANGLE = PiRational(0)

_PI_RE = re.compile(r"^\s*(?P<p>\d+)\s*(?:/\s*(?P<q>\d+))?\s*(?:\*\s*)?(?:pi|π)\s*$")
_PI_RE2 = re.compile(r"^\s*(?P<p>\d*)\s*(?:pi|π)\s*(?:/\s*(?P<q>\d+))?\s*$")


def parse_pi(text: str) -> PiRational:
    """Parse ``"p/q pi"``, ``"pi/5"``, ``"2π/5"`` or ``"0"``."""
    t = text.strip()
    if t == "0":
        return ZERO_ANGLE
    m = _PI_RE.match(t) or _PI_RE2.match(t)
    if not m:
        raise BadParameter(f"cannot parse pi-rational {text!r}")
    p = int(m["p"]) if m["p"] else 1
    q = int(m["q"]) if m["q"] else 1
    return PiRational(p, q)
