"""Human-readable formatting of angle values."""
from __future__ import annotations

from .angles import PiRational


def format_value(v, digits: int = 50) -> str:
    """``p/q·π`` for pi-rationals, otherwise a decimal with ``digits`` significant digits."""
    if isinstance(v, PiRational):
        return str(v)
    pr = getattr(v, "pi_rational", None)
    if callable(pr):
        p = pr()
        if p is not None:
            return str(p)
    from flint import arb, ctx

    old = ctx.prec
    try:
        ctx.prec = int(digits * 3.33) + 32
        ball = v.to_arb() if hasattr(v, "to_arb") else arb(v)
        return ball.str(digits, radius=False)
    finally:
        ctx.prec = old
