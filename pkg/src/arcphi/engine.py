"""Exact evaluation of the small-window overlap functional on arc sets.

For an arc set A on a circle of perimeter L the central quantities are

* ``eval_f(A, x)``  - mass of A inside the forward unit window [x, x+1];
* ``eval_g(A, x)``  - two-sided mass f(x) + f(x-1);
* ``phi(A)``        - measure of ordered pairs (x, y) in A x A with
                      x <= y <= x+1 on the circle, computed in closed form
                      as the exact integral of f over A;
* ``eta(A)``        - slack of phi(A) against its density lower bound
                      (xi + W(xi) - 1) * L, where xi = measure/L.

Windows are intersected with the periodic unrolling of A, so perimeters in
[1, 2) (where the two-sided window overlaps itself) need no special case.
"""

from __future__ import annotations

import math

import numpy as np

from . import _kernels as kernels
from .bounds import density_bound
from .circle import ArcSet, Partition, is_partition, measure
from .errors import InvalidInputError
from .piecewise import PiecewiseLinear


def eval_f(A: ArcSet, x: float) -> float:
    """Mass of A inside the closed forward window [x, x+1]."""
    return float(kernels.f_window(A.bounds_array(), A.L, float(x)))


def eval_g(A: ArcSet, x: float) -> float:
    """Two-sided window mass f(x) + f(x-1)."""
    return float(kernels.g_window(A.bounds_array(), A.L, float(x)))


def _profile(A: ArcSet, offsets: tuple[float, ...], evaluate) -> PiecewiseLinear:
    L = A.L
    if not A.arcs:
        return PiecewiseLinear((0.0,), (0.0,), period=L)
    pts = set()
    for a in A.arcs:
        for v in (a.start, a.end):
            for off in offsets:
                w = math.fmod(v + off, L)
                if w < 0.0:
                    w += L
                if w >= L:  # rounding of a tiny negative remainder
                    w = 0.0
                pts.add(w)
    xs = tuple(sorted(pts))
    ys = tuple(evaluate(x) for x in xs)
    return PiecewiseLinear(xs, ys, period=L)


def f_profile(A: ArcSet) -> PiecewiseLinear:
    """Exact piecewise-linear profile of x -> eval_f(A, x)."""
    return _profile(A, (0.0, -1.0), lambda x: eval_f(A, x))


def g_profile(A: ArcSet) -> PiecewiseLinear:
    """Exact piecewise-linear profile of x -> eval_g(A, x).

    Breakpoints sit at the arc endpoints shifted by -1, 0, +1 (mod L);
    between them g is linear with slope in {-2, -1, 0, 1, 2}.
    """
    return _profile(A, (0.0, -1.0, 1.0), lambda x: eval_g(A, x))


def phi(A: ArcSet) -> float:
    """Forward-window pair measure of A (closed form, no quadrature)."""
    return float(kernels.phi_arcs(A.bounds_array(), A.L))


def integral_f_circle(A: ArcSet) -> float:
    """Exact integral of the window mass over the whole circle.

    Equals measure(A): every point y of A is seen by a window-length worth
    of positions x.
    """
    return float(kernels.integral_f_circle(A.bounds_array(), A.L))


def integral_g_over_set(A: ArcSet) -> float:
    """Exact integral of the two-sided window mass over A itself.

    Equals 2 * phi(A): forward and backward pairs each contribute once.
    """
    return g_profile(A).integral_over(_plain_segments(A))


def _plain_segments(A: ArcSet) -> list[tuple[float, float]]:
    L = A.L
    segs = []
    for a in A.arcs:
        if a.end > L:
            segs.append((a.start, L))
            segs.append((0.0, a.end - L))
        else:
            segs.append((a.start, a.end))
    segs.sort()
    return segs


def eta(A: ArcSet) -> float:
    """Slack of phi(A) against the density lower bound.

    The main inequality this package certifies says eta(A) >= 0 for every
    arc set on a circle of perimeter >= 1.
    """
    lam = measure(A)
    xi = lam / A.L
    return phi(A) - density_bound(xi, A.L)


def phi_partition(P: Partition) -> float:
    """Sum of phi over the parts of a circle partition."""
    if not is_partition(list(P.parts), P.L):
        raise InvalidInputError("parts do not partition the circle")
    return float(sum(phi(p) for p in P.parts))


def mc_phi_estimate(
    A: ArcSet, samples: int, seed: int, chunk: int = 1 << 18
) -> tuple[float, float]:
    """Monte-Carlo estimate of phi(A) with its standard error.

    Samples pairs uniformly on [0, L)^2 and counts hits of A x A inside
    the forward unit band (in-frame part plus the wrapped corner), exactly
    the region whose area phi measures.  Deterministic for a given seed.
    """
    if samples <= 0:
        raise InvalidInputError("need a positive sample count")
    L = A.L
    bounds = A.bounds_array()
    rng = np.random.Generator(np.random.PCG64(seed))
    hits = 0
    left = samples
    while left > 0:
        b = min(chunk, left)
        xs = rng.random(b) * L
        ys = rng.random(b) * L
        hits += kernels.mc_pair_count(bounds, L, xs, ys)
        left -= b
    p = hits / samples
    est = p * L * L
    se = L * L * math.sqrt(max(p * (1.0 - p), 0.0) / samples)
    return est, se


def mc_phi_zscore(A: ArcSet, samples: int, seed: int) -> float:
    """Z-score of the closed-form phi against its Monte-Carlo count.

    The binomial standard error is evaluated at the claimed value rather
    than at the sampled frequency; the plug-in error degenerates to zero
    when a small set receives no hits, which would turn sampling noise
    into a spurious infinite discrepancy.
    """
    value = phi(A)
    est, _ = mc_phi_estimate(A, samples, seed)
    L = A.L
    p0 = value / (L * L)
    se0 = L * L * math.sqrt(max(p0 * (1.0 - p0), 0.0) / samples)
    if se0 == 0.0:
        return 0.0 if est == value else math.inf
    return abs(value - est) / se0
