# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.

Mirror of ``arcphi._kernels._pure`` (same formulas and evaluation order);
see that module for the shared conventions.
"""

from libc.math cimport ceil, floor, fmod
from libc.stdlib cimport free, malloc

import numpy as np

BACKEND_NAME = "compiled"


cdef inline double _wrap(double x, double L) nogil:
    cdef double y = fmod(x, L)
    if y < 0.0:
        y += L
    if y >= L:  # rounding of a tiny negative remainder
        y = 0.0
    return y


cdef inline bint _in_set(const double* b, Py_ssize_t nb, double L, double x) nogil:
    # x must already be in [0, L); arc starts may sit in any frame
    cdef Py_ssize_t i
    cdef double d
    for i in range(0, nb, 2):
        d = fmod(x - b[i], L)
        if d < 0.0:
            d += L
        if d < b[i + 1] - b[i]:
            return True
    return False


cdef double _f_window(const double* b, Py_ssize_t nb, double L, double x) nogil:
    cdef double a = x
    cdef double c = x + 1.0
    cdef double total = 0.0
    cdef double s, e, lo, hi
    cdef long j, jhi
    cdef Py_ssize_t i
    for i in range(0, nb, 2):
        s = b[i]
        e = b[i + 1]
        j = <long>ceil((a - e) / L)
        jhi = <long>floor((c - s) / L)
        while j <= jhi:
            lo = s + j * L
            if a > lo:
                lo = a
            hi = e + j * L
            if c < hi:
                hi = c
            if hi > lo:
                total += hi - lo
            j += 1
    return total


def in_set(double[::1] bounds, double L, double x):
    """Membership of x (any real) in the arc set."""
    if bounds.shape[0] == 0:
        return False
    return bool(_in_set(&bounds[0], bounds.shape[0], L, _wrap(x, L)))


def f_window(double[::1] bounds, double L, double x):
    """Mass of the arc set inside the forward unit window [x, x+1]."""
    if bounds.shape[0] == 0:
        return 0.0
    return _f_window(&bounds[0], bounds.shape[0], L, x)


def g_window(double[::1] bounds, double L, double x):
    """Two-sided window mass: f(x) + f(x-1)."""
    if bounds.shape[0] == 0:
        return 0.0
    cdef const double* b = &bounds[0]
    cdef Py_ssize_t nb = bounds.shape[0]
    return _f_window(b, nb, L, x) + _f_window(b, nb, L, x - 1.0)


cdef Py_ssize_t _breakpoints(const double* b, Py_ssize_t nb, double L,
                             bint with_minus_one, double* out) nogil:
    # sorted unique values of {v mod L} (and {v-1 mod L}) for all bounds
    cdef Py_ssize_t cnt = 0, i, j
    cdef double v
    for i in range(nb):
        out[cnt] = _wrap(b[i], L)
        cnt += 1
        if with_minus_one:
            out[cnt] = _wrap(b[i] - 1.0, L)
            cnt += 1
    # insertion sort (tiny arrays)
    for i in range(1, cnt):
        v = out[i]
        j = i - 1
        while j >= 0 and out[j] > v:
            out[j + 1] = out[j]
            j -= 1
        out[j + 1] = v
    # dedupe on exact equality
    cdef Py_ssize_t m = 0
    for i in range(cnt):
        if m == 0 or out[i] != out[m - 1]:
            out[m] = out[i]
            m += 1
    return m


def phi_arcs(double[::1] bounds, double L):
    """Closed-form value of the forward-window overlap functional."""
    cdef Py_ssize_t nb = bounds.shape[0]
    if nb == 0:
        return 0.0
    cdef const double* b = &bounds[0]
    cdef double* bps = <double*>malloc(2 * nb * sizeof(double))
    if bps == NULL:
        raise MemoryError()
    cdef double total = 0.0
    cdef double x0, x1, w, mid
    cdef Py_ssize_t m, t
    try:
        with nogil:
            m = _breakpoints(b, nb, L, True, bps)
            for t in range(m):
                x0 = bps[t]
                x1 = bps[t + 1] if t + 1 < m else bps[0] + L
                w = x1 - x0
                if w <= 0.0:
                    continue
                mid = _wrap(x0 + 0.5 * w, L)
                if _in_set(b, nb, L, mid):
                    total += 0.5 * (_f_window(b, nb, L, x0)
                                    + _f_window(b, nb, L, x1)) * w
    finally:
        free(bps)
    return total


def integral_f_circle(double[::1] bounds, double L):
    """Exact integral of the window mass over the whole circle."""
    cdef Py_ssize_t nb = bounds.shape[0]
    if nb == 0:
        return 0.0
    cdef const double* b = &bounds[0]
    cdef double* bps = <double*>malloc(2 * nb * sizeof(double))
    if bps == NULL:
        raise MemoryError()
    cdef double total = 0.0
    cdef double x0, x1, w
    cdef Py_ssize_t m, t
    try:
        with nogil:
            m = _breakpoints(b, nb, L, True, bps)
            for t in range(m):
                x0 = bps[t]
                x1 = bps[t + 1] if t + 1 < m else bps[0] + L
                w = x1 - x0
                if w <= 0.0:
                    continue
                total += 0.5 * (_f_window(b, nb, L, x0)
                                + _f_window(b, nb, L, x1)) * w
    finally:
        free(bps)
    return total


def mc_pair_count(double[::1] bounds, double L, double[::1] xs, double[::1] ys):
    """Count sample pairs landing in A x A and in the forward unit band."""
    cdef Py_ssize_t nb = bounds.shape[0]
    cdef Py_ssize_t ns = xs.shape[0]
    if nb == 0 or ns == 0:
        return 0
    cdef const double* b = &bounds[0]
    cdef long count = 0
    cdef Py_ssize_t i
    cdef double x, y
    cdef bint band
    with nogil:
        for i in range(ns):
            x = xs[i]
            y = ys[i]
            band = (x <= y and y <= x + 1.0) or \
                   (x >= L - 1.0 and y <= 1.0 and y <= x + 1.0 - L)
            if band and _in_set(b, nb, L, x) and _in_set(b, nb, L, y):
                count += 1
    return count


def count_mono(long[::1] colors, long m):
    """Monochromatic pairs at index distance <= m in a colour sequence."""
    cdef Py_ssize_t n = colors.shape[0]
    cdef long total = 0
    cdef Py_ssize_t i, j, hi
    cdef long ci
    with nogil:
        for i in range(n):
            ci = colors[i]
            hi = i + m
            if hi > n - 1:
                hi = n - 1
            for j in range(i + 1, hi + 1):
                if colors[j] == ci:
                    total += 1
    return total


def brute_search(long n, long k, long m):
    """Exact minimum of monochromatic distance-<=m pairs over colourings.

    Same search as the pure kernel: lexicographic DFS, first vertex pinned
    to colour 0, pruning on the incumbent; returns the lexicographically
    smallest optimal colouring (0-based colours).
    """
    cdef long kk = k + 1
    if n == 1:
        return 0, [0]
    cdef long* colors = <long*>malloc(n * sizeof(long))
    cdef long* best_colors = <long*>malloc(n * sizeof(long))
    cdef long* trial = <long*>malloc((n + 1) * sizeof(long))
    cdef long* cost = <long*>malloc((n + 1) * sizeof(long))
    if colors == NULL or best_colors == NULL or trial == NULL or cost == NULL:
        free(colors); free(best_colors); free(trial); free(cost)
        raise MemoryError()
    cdef long best = -1
    cdef long v, c, add, newcost, lo, j, i
    try:
        with nogil:
            for i in range(n):
                colors[i] = 0
                best_colors[i] = 0
            for i in range(n + 1):
                trial[i] = 0
                cost[i] = 0
            v = 1
            trial[1] = 0
            while v >= 1:
                c = trial[v]
                if c >= kk:
                    v -= 1
                    continue
                trial[v] += 1
                add = 0
                lo = v - m
                if lo < 0:
                    lo = 0
                for j in range(lo, v):
                    if colors[j] == c:
                        add += 1
                newcost = cost[v] + add
                if best >= 0 and newcost >= best:
                    continue
                colors[v] = c
                if v + 1 == n:
                    best = newcost
                    for j in range(n):
                        best_colors[j] = colors[j]
                else:
                    v += 1
                    trial[v] = 0
                    cost[v] = newcost
        out = [best_colors[i] for i in range(n)]
    finally:
        free(colors)
        free(best_colors)
        free(trial)
        free(cost)
    return best, out
