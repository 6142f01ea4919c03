"""Census report shared by the exact, cyclic and numeric kernels."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Union

from .angles import Mode, PiRational


class Certification(enum.Enum):
    Exact = "exact"
    CertifiedNumeric = "certified-numeric"
    Unresolved = "unresolved"


Count = Union[int, tuple[int, int]]


@dataclass
class CensusReport:
    """Distinct-angle census A(P) of one configuration.

    ``values`` holds one entry per distinct angle in increasing order: a
    :class:`PiRational` when the angle is known to be one, an
    :class:`~anglekit.exact.ExactAngleKey` for other exact angles, or a
    :class:`~anglekit.numeric.BigInterval` hull for uncertified clusters.
    ``witnesses[i]`` is a triple ``(a, vertex, c)`` of point indices realizing
    ``values[i]``.
    """

    mode: Mode
    count: Count
    values: list
    witnesses: list[tuple[int, int, int]]
    certification: Certification
    detail: dict[str, Any] = field(default_factory=dict)
    # numeric reports keep their points so match_expected can re-evaluate them
    points: list | None = field(default=None, repr=False)

    @property
    def is_range(self) -> bool:
        return isinstance(self.count, tuple)

    @property
    def upper_count(self) -> int:
        return self.count[1] if isinstance(self.count, tuple) else self.count

    def pi_values(self) -> list[PiRational] | None:
        """Values as pi-rationals, or None if any value is not one."""
        out = []
        for v in self.values:
            if isinstance(v, PiRational):
                out.append(v)
                continue
            pr = getattr(v, "pi_rational", None)
            pr = pr() if callable(pr) else None
            if pr is None:
                return None
            out.append(pr)
        return out

    def summary(self) -> str:
        from .render_text import format_value

        if isinstance(self.count, tuple):
            head = f"{self.count[0]}..{self.count[1]} distinct angles"
        else:
            head = f"{self.count} distinct angle{'s' if self.count != 1 else ''}"
        vals = ", ".join(format_value(v) for v in self.values)
        return f"{head}: {vals} ({self.certification.value})"
