"""Compare the compiled kernels with the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py``; add ``--quick`` for a short pass.
Both backends must agree on every workload or the script exits nonzero.
"""
from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from anglekit import _fallback, kernels
from anglekit.catalog import get
from anglekit.census import census
from anglekit.config import as_exact, to_float
from anglekit.search.universe import cyclic_universe, grid_universe


def _best_of(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def _subset_workload(universe, k):
    table, values = universe.angle_table()
    n = len(universe)

    def run(impl):
        return [impl(table, len(values), first, k, False) for first in range(n - 2)]

    return run


def _grid_workload(name, k, side):
    base = as_exact(get(name).config)
    xy = np.ascontiguousarray(np.asarray(to_float(base)))
    vals = np.asarray(sorted(float(v) for v in census(base).values))
    axis = np.linspace(-1.5, 2.5, side)
    gx, gy = np.meshgrid(axis, axis, indexing="ij")
    cand = np.ascontiguousarray(np.stack([gx.ravel(), gy.ravel()], axis=1))

    def run(impl):
        return np.asarray(impl(cand, xy, vals, k))

    return run


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.BACKEND != "cython":
        print("compiled extension not built; only the fallback is available")
        return 1
    from anglekit import _speedups

    side = 200 if args.quick else 600
    workloads = [
        ("subset ngon_center:12 k=3", _subset_workload(cyclic_universe(12), 3)),
        ("subset grid:6 k=3", _subset_workload(grid_universe(6), 3)),
        (f"grid_cost right_isosceles {side}x{side}", _grid_workload("right_isosceles", 2, side)),
        (f"grid_cost pentagon_minus_vertex_1c {side}x{side}", _grid_workload("pentagon_minus_vertex_1c", 3, side)),
    ]
    if not args.quick:
        workloads.insert(1, ("subset ngon_center:16 k=4", _subset_workload(cyclic_universe(16), 4)))
    print(f"{'workload':<44} {'compiled':>10} {'python':>10} {'speedup':>8}")
    ok = True
    for label, run in workloads:
        fast_t, fast = _best_of(lambda: run(_speedups_impl(_speedups, label)), args.repeat)
        slow_t, slow = _best_of(lambda: run(_fallback_impl(label)), 1)
        same = _agree(fast, slow)
        ok &= same
        flag = "" if same else "  MISMATCH"
        print(f"{label:<44} {fast_t * 1e3:>8.1f}ms {slow_t * 1e3:>8.1f}ms {slow_t / fast_t:>7.1f}x{flag}")
    return 0 if ok else 2


def _speedups_impl(mod, label):
    return mod.subset_dfs if label.startswith("subset") else mod.grid_cost


def _fallback_impl(label):
    return _fallback.subset_dfs if label.startswith("subset") else _fallback.grid_cost


def _agree(a, b) -> bool:
    if isinstance(a, np.ndarray):
        fin = np.isfinite(a)
        return bool(np.array_equal(fin, np.isfinite(b)) and np.allclose(a[fin], b[fin], rtol=0, atol=1e-12))
    # subset results: best size and witness lists must match exactly; node counts too
    return [(r[0], sorted(r[1]), r[2]) for r in a] == [(r[0], sorted(r[1]), r[2]) for r in b]


if __name__ == "__main__":
    sys.exit(main())
