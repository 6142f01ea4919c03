# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: branch-and-bound subset search and the extension grid cost."""

import numpy as np
cimport numpy as cnp
from libc.math cimport atan2, fabs, sqrt, M_PI, INFINITY
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef struct DFSState:
    int n
    int n_ids
    int k
    int zero_id
    int distinct
    int proper
    int best
    long nodes
    int size
    int *chosen
    int *counts
    int *log
    int log_len


cdef inline int _bump(DFSState *s, int aid) nogil:
    if aid == -1:
        return 0
    if aid == -2:
        if s.zero_id < 0:
            return 0
        aid = s.zero_id
    else:
        s.proper += 1
    if s.counts[aid] == 0:
        s.distinct += 1
    s.counts[aid] += 1
    s.log[s.log_len] = aid
    s.log_len += 1
    return 1


cdef inline void _undo(DFSState *s, int mark) nogil:
    cdef int aid
    while s.log_len > mark:
        s.log_len -= 1
        aid = s.log[s.log_len]
        s.counts[aid] -= 1
        if s.counts[aid] == 0:
            s.distinct -= 1
        if aid != s.zero_id:
            s.proper -= 1


cdef int _add(DFSState *s, const int[:, :, ::1] t, int c) nogil:
    """Push point c; returns 0 when the census would exceed k (state untouched)."""
    cdef int a, b, i, j, mark = s.log_len
    for a in range(s.size):
        i = s.chosen[a]
        for b in range(a + 1, s.size):
            _bump(s, t[i, c, s.chosen[b]])
            if s.distinct > s.k:
                _undo(s, mark)
                return 0
    for a in range(s.size):
        j = s.chosen[a]
        for b in range(s.size):
            if b == a:
                continue
            _bump(s, t[s.chosen[b], j, c])
            if s.distinct > s.k:
                _undo(s, mark)
                return 0
    s.chosen[s.size] = c
    s.size += 1
    return 1


cdef void _rec(DFSState *s, const int[:, :, ::1] t, int start, list out):
    cdef int c, mark
    s.nodes += 1
    if s.size >= 3 and s.proper > 0 and s.size >= s.best:
        if s.size > s.best:
            s.best = s.size
            del out[:]
        out.append(tuple([s.chosen[i] for i in range(s.size)]))
    for c in range(start, s.n):
        if s.size + (s.n - c) < s.best:
            break
        mark = s.log_len
        if _add(s, t, c):
            _rec(s, t, c + 1, out)
            s.size -= 1
            _undo(s, mark)


def subset_dfs(const int[:, :, ::1] table, int n_ids, int first, int k, bint include_zero, int floor=3):
    """Maximum subsets with least index ``first`` and at most ``k`` angles.

    Returns ``(best, witnesses, nodes)``; ``best`` is 0 when no
    non-collinear subset reaches ``floor`` points.
    """
    cdef int n = table.shape[0]
    cdef DFSState s
    cdef list out = []
    cdef int total_ids = n_ids + 1
    s.n = n
    s.n_ids = n_ids
    s.k = k
    s.zero_id = n_ids if include_zero else -1
    s.distinct = 0
    s.proper = 0
    s.best = floor
    s.nodes = 0
    s.size = 0
    s.log_len = 0
    s.chosen = <int *> malloc(n * sizeof(int))
    s.counts = <int *> malloc(total_ids * sizeof(int))
    # each point adds at most 3*C(n,2) triples
    s.log = <int *> malloc((3 * n * n * n // 2 + 8) * sizeof(int))
    try:
        for c in range(total_ids):
            s.counts[c] = 0
        s.chosen[0] = first
        s.size = 1
        _rec(&s, table, first + 1, out)
        best = s.best if out else 0
        return best, out, s.nodes
    finally:
        free(s.chosen)
        free(s.counts)
        free(s.log)


def grid_cost(const double[:, ::1] cand, const double[:, ::1] base, const double[::1] base_angles, int k):
    """Clustering cost of ``base + [p]`` for every candidate ``p``.

    All angles of the extended set together with the anchors 0 and pi are
    split into k+2 groups by cutting the k+1 widest gaps; the cost is the
    summed width of the groups (0 iff at most k distinct angles).
    """
    cdef Py_ssize_t ncand = cand.shape[0], m = base.shape[0], nb = base_angles.shape[0]
    cdef Py_ssize_t nnew = m * (m - 1) // 2 + m * (m - 1)
    cdef Py_ssize_t total = nnew + nb + 2
    cost_arr = np.empty(ncand, dtype=np.float64)
    cdef double[::1] cost = cost_arr
    cdef double *vals = <double *> malloc(total * sizeof(double))
    cdef double *gaps = <double *> malloc(total * sizeof(double))
    # base-to-base vectors, one per ordered pair (j, i), are fixed across candidates
    cdef double *edge = <double *> malloc(2 * m * m * sizeof(double))
    cdef Py_ssize_t q, i, j, l, w, cut
    cdef double px, py, ux, uy, vx, vy, width
    cdef bint bad
    if vals == NULL or gaps == NULL or edge == NULL:
        free(vals)
        free(gaps)
        free(edge)
        raise MemoryError()
    for j in range(m):
        for i in range(m):
            edge[2 * (j * m + i)] = base[i, 0] - base[j, 0]
            edge[2 * (j * m + i) + 1] = base[i, 1] - base[j, 1]
    cut = min(k + 1, total - 1)
    with nogil:
        for q in range(ncand):
            px = cand[q, 0]
            py = cand[q, 1]
            bad = False
            for i in range(m):
                if fabs(base[i, 0] - px) + fabs(base[i, 1] - py) < 1e-12:
                    bad = True
            if bad:
                cost[q] = INFINITY
                continue
            w = 0
            # p as vertex
            for i in range(m):
                ux = base[i, 0] - px
                uy = base[i, 1] - py
                for l in range(i + 1, m):
                    vx = base[l, 0] - px
                    vy = base[l, 1] - py
                    vals[w] = atan2(fabs(ux * vy - uy * vx), ux * vx + uy * vy)
                    w += 1
            # p as an endpoint
            for j in range(m):
                vx = px - base[j, 0]
                vy = py - base[j, 1]
                for i in range(m):
                    if i == j:
                        continue
                    ux = edge[2 * (j * m + i)]
                    uy = edge[2 * (j * m + i) + 1]
                    vals[w] = atan2(fabs(ux * vy - uy * vx), ux * vx + uy * vy)
                    w += 1
            for i in range(nb):
                vals[w] = base_angles[i]
                w += 1
            vals[w] = 0.0
            vals[w + 1] = M_PI
            w += 2
            _sort(vals, w)
            for i in range(w - 1):
                gaps[i] = vals[i + 1] - vals[i]
            _sort(gaps, w - 1)
            width = vals[w - 1] - vals[0]
            for i in range(cut):
                width -= gaps[w - 2 - i]
            cost[q] = width if width > 0 else 0.0
    free(vals)
    free(gaps)
    free(edge)
    return cost_arr


cdef inline void _sort(double *a, Py_ssize_t n) noexcept nogil:
    # insertion sort: the arrays hold a few dozen values
    cdef Py_ssize_t i, j
    cdef double x
    for i in range(1, n):
        x = a[i]
        j = i - 1
        while j >= 0 and a[j] > x:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = x
