"""Best subset sizes per angle budget across universes, compared with the conjectured value."""
from __future__ import annotations

from dataclasses import dataclass

from ..catalog import EXACT_P, bounds, conjectured
from ..errors import BadParameter
from .subset import subset_search
from .universe import SearchUniverse


@dataclass
class ProbeRow:
    k: int
    best: int
    universe: str
    conjectured: int
    lower: int
    upper: int
    exact: int | None
    witness: tuple[int, ...] | None

    @property
    def status(self) -> str:
        if self.best > self.conjectured:
            return "EXCEEDS CONJECTURE"
        if self.best == self.conjectured:
            return "consistent with conjecture"
        return "below conjecture in these universes"

    @property
    def within_bounds(self) -> bool:
        return self.best <= self.upper


def conjecture_probe(k_max: int, universes: list[SearchUniverse], threads: int = 1) -> list[ProbeRow]:
    """For k = 1..k_max, the largest subset with at most k angles over all universes.

    Finds are finite-universe statements only; a size above the conjectured
    value would be a genuine refutation and is flagged in ``status``.
    """
    if k_max < 1:
        raise BadParameter("kmax must be at least 1")
    if not universes:
        raise BadParameter("no universes given")
    rows = []
    for k in range(1, k_max + 1):
        best, where, witness = 0, "", None
        for u in universes:
            if len(u) <= best:
                continue
            res = subset_search(u, k, threads=threads, with_reports=False)
            if res.best_size > best:
                best, where, witness = res.best_size, u.name, res.witnesses[0]
        b = bounds(k)
        rows.append(ProbeRow(k, best, where, conjectured(k), b.lower, b.upper, EXACT_P.get(k), witness))
    return rows
