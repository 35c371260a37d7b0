"""Closed-form lower bounds and their numerical certifiers.

The bound kernel is W(xi) = sqrt(xi^2 + (1-xi)^2).  Everything here is a
direct consequence of it:

* density bound      phi(A) >= (xi + W(xi) - 1) * L,
* colouring bound    sum of phi over k+1 parts >= (sqrt(k^2+1) - k) * L,
* discrete bound     f(k, m, n) >= ((sqrt(k^2+1) - k) m - 1/2) n - m^2/2,

plus the envelope certificate behind the density bound: any 1-Lipschitz
profile h on [0, alpha] with h(0) = h(alpha) = phi_coeff(xi) and
h >= max(xi/W, alpha) integrates to at least 2 alpha (W + xi - 1) / xi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .piecewise import PiecewiseLinear


def W(xi: float) -> float:
    """Bound kernel sqrt(xi^2 + (1-xi)^2); symmetric about xi = 1/2."""
    if not 0.0 <= xi <= 1.0:
        raise DomainError(f"density must lie in [0, 1], got {xi}")
    return math.sqrt(2.0 * xi * xi - 2.0 * xi + 1.0)


def phi_coeff(xi: float) -> float:
    """Boundary level 1 + (2 xi - 1)/W(xi) of the window mass at minimisers.

    Defined for densities in (0, 1]; the envelope certificates use it on
    (0, 1/2].  Satisfies the factorisation
    phi_coeff = (W + 1)(W + xi - 1) / (W xi).
    """
    if not 0.0 < xi <= 1.0:
        raise DomainError(f"density must lie in (0, 1], got {xi}")
    return 1.0 + (2.0 * xi - 1.0) / W(xi)


def density_bound(xi: float, L: float) -> float:
    """Lower bound (xi + W(xi) - 1) * L for the pair measure at density xi."""
    return (xi + W(xi) - 1.0) * L


def colouring_bound(k: int, L: float) -> float:
    """Lower bound (sqrt(k^2+1) - k) * L for the pair measure summed over
    k+1 partition classes."""
    if k < 0:
        raise DomainError(f"need k >= 0, got {k}")
    return (math.sqrt(k * k + 1.0) - k) * L


def discrete_bound(k: int, m: int, n: int) -> float:
    """Lower bound ((sqrt(k^2+1)-k) m - 1/2) n - m^2/2 for the minimum
    monochromatic edge count of the m-th path power on n vertices.

    May be negative; callers decide whether to clamp.
    """
    if k < 0 or m < 1:
        raise DomainError(f"need k >= 0 and m >= 1, got k={k}, m={m}")
    if n < m:
        raise DomainError(f"need n >= m, got n={n}, m={m}")
    return ((math.sqrt(k * k + 1.0) - k) * m - 0.5) * n - m * m / 2.0


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one bound check: achieved value vs bound, and slack."""

    bound_value: float
    achieved_value: float
    slack: float
    context: str
    passes: bool
    detail: dict | None = None


def fact21_check(grid_size: int) -> BoundReport:
    """Grid check of 2 W(xi) <= 2 - xi on [0, 1/2].

    Reports the minimum of (2 - xi) - 2 W(xi); passes when it stays above
    -1e-12 (it is 0 at xi = 0 and positive inside).
    """
    if grid_size < 2:
        raise DomainError("need at least two grid points")
    worst = math.inf
    worst_xi = 0.0
    for i in range(grid_size):
        xi = 0.5 * i / (grid_size - 1)
        s = (2.0 - xi) - 2.0 * W(xi)
        if s < worst:
            worst = s
            worst_xi = xi
    return BoundReport(
        bound_value=0.0,
        achieved_value=worst,
        slack=worst,
        context=f"2W <= 2-xi on [0,1/2], grid {grid_size}",
        passes=worst >= -1e-12,
        detail={"worst_xi": worst_xi},
    )


TRIANGLE = "triangle"
PLATEAU_XIW = "plateau_xiW"
PLATEAU_ALPHA = "plateau_alpha"


@dataclass(frozen=True)
class Lemma3Case:
    """Envelope certificate for admissible 1-Lipschitz profiles on [0, alpha].

    ``case_id`` selects which piecewise-linear lower envelope applies:
    a plain tent from the boundary level, a plateau at xi/W, or a plateau
    at alpha.  ``integral`` is the exact envelope integral and ``required``
    the certified lower bound 2 alpha (W + xi - 1) / xi.
    """

    xi: float
    alpha: float
    case_id: str
    envelope: PiecewiseLinear
    integral: float
    required: float


def lemma3_envelope(xi: float, alpha: float) -> Lemma3Case:
    """Exact envelope and integral for the admissible-profile lower bound.

    Case boundaries: tent while alpha <= 2(1 - (1-xi)/W), plateau at xi/W
    until alpha <= xi/W, plateau at alpha beyond.  Needs alpha <= phi_coeff
    (otherwise no admissible profile exists, since h(0) >= alpha).
    """
    if not 0.0 < xi <= 0.5:
        raise DomainError(f"density must lie in (0, 1/2], got {xi}")
    if alpha < 0.0:
        raise DomainError(f"need alpha >= 0, got {alpha}")
    w = W(xi)
    phi0 = phi_coeff(xi)
    if alpha > phi0:
        raise DomainError(
            f"alpha={alpha} exceeds the boundary level {phi0}; "
            "no admissible profile exists")
    required = 2.0 * alpha * (w + xi - 1.0) / xi
    c1 = 2.0 * (1.0 - (1.0 - xi) / w)
    c2 = xi / w
    if alpha <= c1:
        case = TRIANGLE
        if alpha == 0.0:
            env = PiecewiseLinear((0.0,), (phi0,))
        else:
            env = PiecewiseLinear(
                (0.0, alpha / 2.0, alpha),
                (phi0, phi0 - alpha / 2.0, phi0),
            )
        integral = alpha * phi0 - alpha * alpha / 4.0
    elif alpha <= c2:
        case = PLATEAU_XIW
        t = 1.0 - (1.0 - xi) / w  # = phi_coeff - xi/W
        env = PiecewiseLinear(
            (0.0, t, alpha - t, alpha),
            (phi0, c2, c2, phi0),
        )
        integral = c2 * alpha + (phi0 - c2) ** 2
    else:
        case = PLATEAU_ALPHA
        env = PiecewiseLinear(
            (0.0, phi0 - alpha, 2.0 * alpha - phi0, alpha),
            (phi0, alpha, alpha, phi0),
        )
        integral = alpha * alpha + (phi0 - alpha) ** 2
    return Lemma3Case(
        xi=xi, alpha=alpha, case_id=case, envelope=env,
        integral=integral, required=required,
    )


def random_admissible_profile(
    xi: float, alpha: float, rng: np.random.Generator, depth: int = 6
) -> PiecewiseLinear:
    """Random 1-Lipschitz profile meeting the envelope hypotheses.

    Midpoint displacement: recursively sample each midpoint uniformly
    inside the Lipschitz cone of its endpoints, clipped below at
    max(xi/W, alpha).  Clipping with a constant keeps the Lipschitz bound,
    and both endpoints sit at phi_coeff >= the floor, so the cone section
    is never empty.
    """
    w = W(xi)
    phi0 = phi_coeff(xi)
    if alpha > phi0:
        raise DomainError(
            f"alpha={alpha} exceeds the boundary level {phi0}; "
            "no admissible profile exists")
    floor = max(xi / w, alpha)
    if alpha == 0.0:
        return PiecewiseLinear((0.0,), (phi0,))

    xs_out = [0.0]
    ys_out = [phi0]

    def build(x0, y0, x1, y1, level):
        if level == 0:
            xs_out.append(x1)
            ys_out.append(y1)
            return
        xm = 0.5 * (x0 + x1)
        d = 0.5 * (x1 - x0)
        lo = max(max(y0, y1) - d, floor)
        hi = min(y0, y1) + d
        ym = lo + (hi - lo) * rng.random() if hi > lo else lo
        build(x0, y0, xm, ym, level - 1)
        build(xm, ym, x1, y1, level - 1)

    build(0.0, phi0, alpha, phi0, depth)
    return PiecewiseLinear(tuple(xs_out), tuple(ys_out))


def lemma3_random_check(
    xi: float, alpha: float, trials: int, seed: int
) -> BoundReport:
    """Randomized certificate check: admissible profiles integrate to at
    least the required lower bound.

    Reports the minimum slack (integral - required) over the trials.
    """
    case = lemma3_envelope(xi, alpha)  # validates the domain
    rng = np.random.Generator(np.random.PCG64(seed))
    worst = math.inf
    for _ in range(max(trials, 1)):
        h = random_admissible_profile(xi, alpha, rng)
        slack = h.integral() - case.required
        if slack < worst:
            worst = slack
    return BoundReport(
        bound_value=case.required,
        achieved_value=case.required + worst,
        slack=worst,
        context=f"random admissible profiles xi={xi} alpha={alpha} "
                f"trials={trials} seed={seed}",
        passes=worst >= -1e-9,
    )
