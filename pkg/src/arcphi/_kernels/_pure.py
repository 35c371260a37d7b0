"""Pure-Python kernels.

Reference implementations of the hot numeric loops.  The compiled module
``arcphi._kernels._core`` mirrors these routines operation for operation
(same formulas, same evaluation order), so both backends agree to the last
ulp in practice.

Conventions shared by every kernel:

* an arc set is a flat float64 vector ``bounds = [s0, e0, s1, e1, ...]``
  of start/end pairs on a circle of perimeter ``L``; arcs are disjoint,
  ``0 <= s < L`` and ``s < e <= s + L`` (the single wrapping arc may have
  ``e > L``);
* "window" means a closed interval of length 1 on the circle, handled by
  intersecting with the periodic unrolling of the arcs, which is what makes
  perimeters in ``[1, 2)`` come out right with no special casing.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND_NAME = "pure"


def _wrap(x: float, L: float) -> float:
    """Reduce x into [0, L)."""
    y = math.fmod(x, L)
    if y < 0.0:
        y += L
    if y >= L:  # rounding of a tiny negative remainder
        y = 0.0
    return y


def in_set(bounds, L: float, x: float) -> bool:
    """Membership of x (any real) in the arc set."""
    b = _as_list(bounds)
    return _in_set(b, L, _wrap(x, L))


def _as_list(bounds) -> list:
    if isinstance(bounds, list):
        return bounds
    return [float(v) for v in bounds]


def _in_set(b: list, L: float, x: float) -> bool:
    # x must already be in [0, L); arc starts may sit in any frame
    for i in range(0, len(b), 2):
        d = math.fmod(x - b[i], L)
        if d < 0.0:
            d += L
        if d < b[i + 1] - b[i]:
            return True
    return False


def _f_window(b: list, L: float, x: float) -> float:
    # mass of the arcs inside the closed window [x, x+1], via the unrolling
    a = x
    c = x + 1.0
    total = 0.0
    for i in range(0, len(b), 2):
        s = b[i]
        e = b[i + 1]
        j = math.ceil((a - e) / L)
        jhi = math.floor((c - s) / L)
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


def f_window(bounds, L: float, x: float) -> float:
    """Mass of the arc set inside the forward unit window [x, x+1]."""
    return _f_window(_as_list(bounds), L, x)


def g_window(bounds, L: float, x: float) -> float:
    """Two-sided window mass: f(x) + f(x-1)."""
    b = _as_list(bounds)
    return _f_window(b, L, x) + _f_window(b, L, x - 1.0)


def _breakpoints(b: list, L: float, offsets) -> list:
    pts = []
    for v in b:
        for off in offsets:
            pts.append(_wrap(v + off, L))
    pts.sort()
    out = []
    prev = None
    for p in pts:
        if p != prev:
            out.append(p)
            prev = p
    return out


def phi_arcs(bounds, L: float) -> float:
    """Closed-form value of the forward-window overlap functional.

    Integrates the piecewise-linear window mass x -> f(x) over the arc set
    by exact trapezoids between its breakpoints.
    """
    b = _as_list(bounds)
    if not b:
        return 0.0
    bps = _breakpoints(b, L, (0.0, -1.0))
    total = 0.0
    m = len(bps)
    for t in range(m):
        x0 = bps[t]
        x1 = bps[t + 1] if t + 1 < m else bps[0] + L
        w = x1 - x0
        if w <= 0.0:
            continue
        mid = _wrap(x0 + 0.5 * w, L)
        if _in_set(b, L, mid):
            total += 0.5 * (_f_window(b, L, x0) + _f_window(b, L, x1)) * w
    return total


def integral_f_circle(bounds, L: float) -> float:
    """Exact integral of the window mass over the whole circle."""
    b = _as_list(bounds)
    if not b:
        return 0.0
    bps = _breakpoints(b, L, (0.0, -1.0))
    total = 0.0
    m = len(bps)
    for t in range(m):
        x0 = bps[t]
        x1 = bps[t + 1] if t + 1 < m else bps[0] + L
        w = x1 - x0
        if w <= 0.0:
            continue
        total += 0.5 * (_f_window(b, L, x0) + _f_window(b, L, x1)) * w
    return total


def mc_pair_count(bounds, L: float, xs, ys) -> int:
    """Count sample pairs landing in A x A and in the forward unit band.

    The band is the union of the in-frame part {x <= y <= x+1} and the
    wrapped corner {x in [L-1, L), y in [0, 1], y <= x+1-L}.
    """
    b = _as_list(bounds)
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    mask_x = _member_mask(b, L, xs)
    mask_y = _member_mask(b, L, ys)
    d1 = (xs <= ys) & (ys <= xs + 1.0)
    d2 = (xs >= L - 1.0) & (ys <= 1.0) & (ys <= xs + 1.0 - L)
    return int(np.count_nonzero(mask_x & mask_y & (d1 | d2)))


def _member_mask(b: list, L: float, pts: np.ndarray) -> np.ndarray:
    mask = np.zeros(pts.shape, dtype=bool)
    for i in range(0, len(b), 2):
        d = pts - b[i]
        d[d < 0.0] += L
        mask |= d < (b[i + 1] - b[i])
    return mask


def count_mono(colors, m: int) -> int:
    """Monochromatic pairs at index distance <= m in a colour sequence."""
    c = list(colors)
    n = len(c)
    total = 0
    for i in range(n):
        ci = c[i]
        hi = i + m
        if hi > n - 1:
            hi = n - 1
        for j in range(i + 1, hi + 1):
            if c[j] == ci:
                total += 1
    return total


def brute_search(n: int, k: int, m: int) -> tuple[int, list[int]]:
    """Exact minimum of monochromatic distance-<=m pairs over colourings.

    Depth-first enumeration of (k+1)-colourings of 1..n in lexicographic
    order with the first vertex pinned to colour 0, pruning branches whose
    partial cost already reaches the incumbent.  Strict improvement keeps
    the first optimal leaf, i.e. the lexicographically smallest witness.
    Colours are 0-based here; callers shift to 1-based.
    """
    kk = k + 1
    colors = [0] * n
    if n == 1:
        return 0, [0]
    best = -1
    best_colors = [0] * n
    # trial[v]: next colour to try at vertex v; cost[v]: cost of prefix < v
    trial = [0] * (n + 1)
    cost = [0] * (n + 1)
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
            best_colors = colors.copy()
        else:
            v += 1
            trial[v] = 0
            cost[v] = newcost
    return best, best_colors
