"""Branch-and-bound search for the largest subsets with at most k distinct angles."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from ..angles import Mode
from ..census import census
from ..errors import BadParameter, UniverseTooSmall
from ..kernels import subset_dfs
from ..report import CensusReport
from .universe import PI_ID, ZERO_ID, SearchUniverse


@dataclass
class SubsetResult:
    universe: str
    k: int
    mode: Mode
    best_size: int
    witnesses: list[tuple[int, ...]]
    nodes_explored: int
    reports: list[CensusReport] = field(default_factory=list)

    def witness_points(self, universe: SearchUniverse):
        return [[universe.config.points[i] for i in w] for w in self.witnesses]


def _check(universe: SearchUniverse, k: int):
    if len(universe) < 3:
        raise UniverseTooSmall(f"{universe.name} has {len(universe)} points")
    if k < 1:
        raise BadParameter("k must be at least 1")


def subset_search(
    universe: SearchUniverse,
    k: int,
    mode: Mode = Mode.ExcludeZero,
    threads: int = 1,
    with_reports: bool = True,
) -> SubsetResult:
    """All maximum non-collinear subsets with census at most k, up to symmetry.

    The tree is split by least index; each task keeps its own bound so the
    merged result does not depend on scheduling or thread count.
    """
    _check(universe, k)
    table, values = universe.angle_table()
    n = len(universe)
    include_zero = mode is Mode.IncludeZero

    def task(first: int):
        return subset_dfs(table, len(values), first, k, include_zero)

    firsts = range(n - 2)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(task, firsts))
    else:
        results = [task(f) for f in firsts]
    best = max(r[0] for r in results)
    nodes = sum(r[2] for r in results)
    found = set()
    if best:
        for b, ws, _ in results:
            if b == best:
                found.update(universe.canonical(w) for w in ws)
    witnesses = sorted(found)
    reports = []
    if with_reports:
        reports = [census(universe.config.subset(w), mode) for w in witnesses]
    return SubsetResult(universe.name, k, mode, best, witnesses, nodes, reports)


def subset_census(table, subset, include_zero: bool) -> tuple[int, bool]:
    """Distinct-angle count of a subset from the table, and whether it is non-collinear."""
    ids = set()
    proper = False
    for j in subset:
        for i, l in combinations(subset, 2):
            if j == i or j == l:
                continue
            a = int(table[i, j, l])
            if a == PI_ID:
                continue
            if a == ZERO_ID:
                if include_zero:
                    ids.add(-2)
                continue
            proper = True
            ids.add(a)
    return len(ids), proper


def exhaustive_search(universe: SearchUniverse, k: int, mode: Mode = Mode.ExcludeZero) -> SubsetResult:
    """Unpruned oracle: every subset, largest first (small universes only)."""
    _check(universe, k)
    n = len(universe)
    if n > 16:
        raise BadParameter("exhaustive search is limited to 16 points")
    table, _ = universe.angle_table()
    include_zero = mode is Mode.IncludeZero
    nodes = 0
    for size in range(n, 2, -1):
        hits = []
        for sub in combinations(range(n), size):
            nodes += 1
            cnt, proper = subset_census(table, sub, include_zero)
            if proper and cnt <= k:
                hits.append(universe.canonical(sub))
        if hits:
            return SubsetResult(universe.name, k, mode, size, sorted(set(hits)), nodes)
    return SubsetResult(universe.name, k, mode, 0, [], nodes)
