"""Pure-Python versions of the compiled kernels (same results, slower)."""
from __future__ import annotations

import math

import numpy as np


def subset_dfs(table, n_ids: int, first: int, k: int, include_zero: bool, floor: int = 3):
    t = np.asarray(table).tolist()
    n = len(t)
    zero_id = n_ids if include_zero else -1
    counts = [0] * (n_ids + 1)
    chosen = [first]
    log: list[int] = []
    out: list[tuple[int, ...]] = []
    st = {"distinct": 0, "proper": 0, "best": floor, "nodes": 0}

    def bump(aid: int):
        if aid == -1:
            return
        if aid == -2:
            if zero_id < 0:
                return
            aid = zero_id
        else:
            st["proper"] += 1
        if counts[aid] == 0:
            st["distinct"] += 1
        counts[aid] += 1
        log.append(aid)

    def undo(mark: int):
        while len(log) > mark:
            aid = log.pop()
            counts[aid] -= 1
            if counts[aid] == 0:
                st["distinct"] -= 1
            if aid != zero_id:
                st["proper"] -= 1

    def add(c: int) -> bool:
        mark = len(log)
        size = len(chosen)
        for a in range(size):
            row = t[chosen[a]][c]
            for b in range(a + 1, size):
                bump(row[chosen[b]])
                if st["distinct"] > k:
                    undo(mark)
                    return False
        for a in range(size):
            j = chosen[a]
            for b in range(size):
                if b != a:
                    bump(t[chosen[b]][j][c])
                    if st["distinct"] > k:
                        undo(mark)
                        return False
        chosen.append(c)
        return True

    def rec(start: int):
        st["nodes"] += 1
        size = len(chosen)
        if size >= 3 and st["proper"] > 0 and size >= st["best"]:
            if size > st["best"]:
                st["best"] = size
                out.clear()
            out.append(tuple(chosen))
        for c in range(start, n):
            if size + (n - c) < st["best"]:
                break
            mark = len(log)
            if add(c):
                rec(c + 1)
                chosen.pop()
                undo(mark)

    rec(first + 1)
    return (st["best"] if out else 0), out, st["nodes"]


def grid_cost(cand, base, base_angles, k: int):
    """Vectorized clustering cost; see the compiled version for the definition."""
    cand = np.asarray(cand, dtype=float)
    base = np.asarray(base, dtype=float)
    m = len(base)
    px, py = cand[:, 0:1], cand[:, 1:2]
    cols = []
    for i in range(m):
        for l in range(i + 1, m):
            ux, uy = base[i, 0] - px, base[i, 1] - py
            vx, vy = base[l, 0] - px, base[l, 1] - py
            cols.append(np.arctan2(np.abs(ux * vy - uy * vx), ux * vx + uy * vy))
    for j in range(m):
        for i in range(m):
            if i == j:
                continue
            ux, uy = base[i, 0] - base[j, 0], base[i, 1] - base[j, 1]
            vx, vy = px - base[j, 0], py - base[j, 1]
            cols.append(np.arctan2(np.abs(ux * vy - uy * vx), ux * vx + uy * vy))
    fixed = np.concatenate([np.asarray(base_angles, dtype=float), [0.0, math.pi]])
    vals = np.concatenate(cols + [np.broadcast_to(fixed, (len(cand), len(fixed)))], axis=1)
    vals.sort(axis=1)
    gaps = np.diff(vals, axis=1)
    gaps.sort(axis=1)
    cut = min(k + 1, gaps.shape[1])
    cost = (vals[:, -1] - vals[:, 0]) - gaps[:, gaps.shape[1] - cut :].sum(axis=1)
    cost = np.maximum(cost, 0.0)
    hit = (np.abs(base[None, :, 0] - px) + np.abs(base[None, :, 1] - py) < 1e-12).any(axis=1)
    cost[hit] = np.inf
    return cost
