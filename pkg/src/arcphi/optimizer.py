"""Numerical minimisation of the bound slack over endpoint configurations.

A configuration is a sorted tuple (a_1, ..., a_2n) in [0, L] encoding the
arc set [a_1, a_2) u ... u [a_2n-1, a_2n).  The slack eta is piecewise
smooth in the endpoints with the exact derivative

    d eta / d a_i = s_i * (g(a_i) - phi_coeff(xi)),

where s_i is -1 at left endpoints and +1 at right endpoints (growing the
set lowers the slack at rate g - phi_coeff).  Projected gradient descent
with multistart either keeps the measure fixed at xi*L (default; steps are
re-scaled back onto the constraint) or lets the measure float.

Converged minimisers are judged against the first-order conditions of the
extremal analysis: boundary window mass equal to phi_coeff(xi), interior
window mass at least xi/W(xi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as kernels
from .bounds import W, colouring_bound, phi_coeff
from .circle import ArcSet, complement, measure, normalize
from .engine import g_profile
from .errors import DegenerateConfigError, DomainError

_EPS_REL = 1e-12  # collapse threshold, relative to L
_MIN_STEP_REL = 1e-16


@dataclass(frozen=True)
class ConfigPoint:
    """Sorted endpoint tuple (a_1 <= ... <= a_2n) on a circle of perimeter L."""

    endpoints: tuple[float, ...]
    L: float

    def __post_init__(self):
        e = self.endpoints
        if len(e) % 2 != 0:
            raise DomainError("need an even number of endpoints")
        if any(b < a for a, b in zip(e, e[1:])):
            raise DomainError("endpoints must be sorted")
        if e and (e[0] < 0.0 or e[-1] > self.L):
            raise DomainError("endpoints must lie in [0, L]")

    @property
    def n_arcs(self) -> int:
        return len(self.endpoints) // 2

    def to_arcset(self) -> ArcSet:
        e = self.endpoints
        raw = [(e[2 * i], e[2 * i + 1] - e[2 * i]) for i in range(len(e) // 2)]
        return normalize(raw, self.L)


@dataclass(frozen=True)
class OptResult:
    """Best configuration found by a multistart run."""

    best: ConfigPoint
    eta_value: float
    stationarity_residual: float  # max |g(a_i) - phi_coeff| at the optimum
    trajectory_length: int
    restarts_used: int
    seed: int
    converged: bool
    mode: str  # "fixed-xi" or "free-xi"
    min_eta_seen: float  # over every configuration evaluated in the run

    def to_json_dict(self) -> dict:
        return {
            "endpoints": list(self.best.endpoints),
            "L": self.best.L,
            "eta": self.eta_value,
            "stationarity_residual": self.stationarity_residual,
            "trajectory_length": self.trajectory_length,
            "restarts_used": self.restarts_used,
            "seed": self.seed,
            "converged": self.converged,
            "mode": self.mode,
            "min_eta_seen": self.min_eta_seen,
        }


@dataclass(frozen=True)
class StationarityReport:
    """First-order optimality residuals of an arc set.

    boundary_residuals: |g(a_i) - phi_coeff(xi)| per endpoint.
    interior_min: min over sampled x in A of g(x) - xi/W(xi).
    """

    boundary_residuals: tuple[float, ...]
    interior_min: float
    tol: float
    passes: bool
    xi: float

    def to_json_dict(self) -> dict:
        return {
            "boundary_residuals": list(self.boundary_residuals),
            "interior_min": self.interior_min,
            "tol": self.tol,
            "passes": self.passes,
            "xi": self.xi,
        }


def eta_gradient(p: ConfigPoint) -> list[float]:
    """Exact partial derivatives of eta in the endpoints (no differences).

    Requires a non-degenerate configuration: strictly increasing endpoints,
    and not closing up through 0 on both sides at once.
    """
    e = p.endpoints
    if not e:
        return []
    if any(b <= a for a, b in zip(e, e[1:])):
        raise DegenerateConfigError("coincident endpoints")
    if e[0] == 0.0 and e[-1] == p.L:
        raise DegenerateConfigError("first and last arc touch through 0")
    bounds = np.asarray(e, dtype=np.float64)
    L = p.L
    lam = sum(e[2 * i + 1] - e[2 * i] for i in range(len(e) // 2))
    xi = lam / L
    if not 0.0 < xi < 1.0:
        raise DegenerateConfigError(f"degenerate density {xi}")
    phi0 = phi_coeff(xi)
    grad = []
    for i, a in enumerate(e):
        s = -1.0 if i % 2 == 0 else 1.0
        grad.append(s * (kernels.g_window(bounds, L, a) - phi0))
    return grad


def _eta_of_bounds(bounds: np.ndarray, L: float) -> float:
    lam = float(np.sum(bounds[1::2] - bounds[::2]))
    # rounding may push the density an ulp outside [0, 1] near the drains
    xi = min(max(lam / L, 0.0), 1.0)
    return float(kernels.phi_arcs(bounds, L)) - (xi + W(xi) - 1.0) * L


def _split_lengths(e: np.ndarray, L: float) -> tuple[np.ndarray, np.ndarray]:
    """(arc lengths, gaps) of an endpoint vector; last gap wraps through 0."""
    alphas = e[1::2] - e[::2]
    n = len(alphas)
    gaps = np.empty(n)
    for i in range(n - 1):
        gaps[i] = e[2 * i + 2] - e[2 * i + 1]
    gaps[n - 1] = L - e[-1] + e[0]
    return alphas, gaps


def _collapse(alphas: list[float], gaps: list[float], eps: float):
    """Drop vanished arcs and merge arcs across vanished gaps, in place."""
    changed = True
    while changed and alphas:
        changed = False
        n = len(alphas)
        for i in range(n):
            if alphas[i] <= eps:
                gaps[(i - 1) % n] += alphas[i] + gaps[i]
                del alphas[i]
                del gaps[i]
                changed = True
                break
        if changed or len(alphas) < 2:
            continue
        n = len(alphas)
        for i in range(n):
            if gaps[i] <= eps:
                if i < n - 1:
                    alphas[i] += gaps[i] + alphas[i + 1]
                    del alphas[i + 1]
                    del gaps[i]
                else:  # wrap gap: merge last arc into the first, relabel
                    merged = alphas[-1] + gaps[-1] + alphas[0]
                    alphas[:] = [merged] + alphas[1:-1]
                    gaps[:] = gaps[:-1]
                changed = True
                break


def _rebuild(alphas, gaps, L: float) -> np.ndarray:
    """Canonical endpoint vector: first arc starts at half the wrap gap."""
    if not len(alphas):
        return np.empty(0)
    e = np.empty(2 * len(alphas))
    a = 0.5 * gaps[-1]
    for i in range(len(alphas)):
        e[2 * i] = a
        a += alphas[i]
        e[2 * i + 1] = a
        if i < len(alphas) - 1:
            a += gaps[i]
    return e


def _start_config(
    xi: float, L: float, n: int, rng: np.random.Generator | None
) -> np.ndarray:
    """Equispaced start (rng None) or random lengths/gaps at measure xi*L."""
    if rng is None:
        alphas = np.full(n, xi * L / n)
        gaps = np.full(n, (1.0 - xi) * L / n)
    else:
        a = rng.random(n) + 1e-3
        g = rng.random(n) + 1e-3
        alphas = a / a.sum() * (xi * L)
        gaps = g / g.sum() * ((1.0 - xi) * L)
    return _rebuild(alphas, gaps, L)


def _descend(
    e: np.ndarray,
    L: float,
    xi_target: float | None,
    max_iters: int,
    tol: float,
) -> tuple[np.ndarray, float, int, bool, float]:
    """Projected-gradient descent from one start.

    Returns (endpoints, eta, accepted steps, converged, min eta seen).
    xi_target None means the measure is free.
    """
    eta = _eta_of_bounds(e, L)
    min_seen = eta
    accepted = 0
    converged = False
    for _ in range(max_iters):
        if len(e) == 0:
            converged = True
            break
        lam = float(np.sum(e[1::2] - e[::2]))
        xi = lam / L
        if xi <= 0.0 or xi >= 1.0:
            converged = True
            break
        phi0 = phi_coeff(xi)
        sign = np.tile([-1.0, 1.0], len(e) // 2)
        gvals = np.array([kernels.g_window(e, L, a) for a in e])
        grad = sign * (gvals - phi0)
        if xi_target is not None:
            grad = grad - (sign @ grad) / len(e) * sign
        gmax = float(np.max(np.abs(grad))) if len(grad) else 0.0
        if gmax < tol:
            converged = True
            break

        step = 0.1 * L / max(gmax, 1.0)
        improved = False
        while step * gmax > _MIN_STEP_REL * L:
            cand = e - step * grad
            step *= 0.5
            d = np.diff(cand)
            if len(d) and d.min() < 0.0:
                continue
            if cand[-1] - cand[0] >= L:
                continue
            alphas, gaps = _split_lengths(cand, L)
            al = [float(v) for v in alphas]
            gp = [float(v) for v in gaps]
            gp[-1] = L - (sum(al) + sum(gp[:-1]))  # exact budget
            if gp[-1] < 0.0:
                continue
            if xi_target is not None:
                ta = sum(al)
                tg = sum(gp)
                if ta <= 0.0 or tg <= 0.0:
                    continue
                al = [v * (xi_target * L / ta) for v in al]
                gp = [v * ((1.0 - xi_target) * L / tg) for v in gp]
            _collapse(al, gp, _EPS_REL * L)
            cand = _rebuild(al, gp, L)
            cand_eta = _eta_of_bounds(cand, L)
            if cand_eta < min_seen:
                min_seen = cand_eta
            if cand_eta < eta:
                e = cand
                eta = cand_eta
                accepted += 1
                improved = True
                break
        if not improved:
            converged = True
            break
    return e, eta, accepted, converged, min_seen


def minimize_eta(
    xi: float,
    L: float,
    n: int,
    restarts: int = 16,
    max_iters: int = 10_000,
    tol: float = 1e-9,
    seed: int = 0,
    fixed_xi: bool = True,
) -> OptResult:
    """Multistart projected-gradient minimisation of eta over n-arc sets.

    fixed_xi True (default) keeps the measure at xi*L by rescaling the arc
    and gap lengths after every step; False lets the measure float with xi
    as the starting density.  Deterministic for a given seed; restart 0
    starts from the equispaced configuration, the rest are random.  The
    best restart wins, ties by the lowest restart index.
    """
    if not 0.0 < xi < 1.0:
        raise DomainError(f"density must lie in (0, 1), got {xi}")
    if L < 1.0:
        raise DomainError(f"perimeter must satisfy L >= 1, got {L}")
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    xi_target = xi if fixed_xi else None
    seeds = np.random.SeedSequence(seed).spawn(max(restarts, 1))
    best = None
    total_steps = 0
    min_seen = math.inf
    for r in range(max(restarts, 1)):
        rng = None if r == 0 else np.random.Generator(np.random.PCG64(seeds[r]))
        e0 = _start_config(xi, L, n, rng)
        e, eta, steps, conv, seen = _descend(e0, L, xi_target, max_iters, tol)
        total_steps += steps
        min_seen = min(min_seen, seen)
        if best is None or eta < best[1]:
            best = (e, eta, conv)
    e, eta, conv = best
    cp = ConfigPoint(tuple(float(v) for v in e), L)
    resid = 0.0
    if len(e):
        lam = float(np.sum(e[1::2] - e[::2]))
        cur_xi = lam / L
        if 0.0 < cur_xi <= 1.0:
            phi0 = phi_coeff(cur_xi)
            resid = max(abs(kernels.g_window(e, L, a) - phi0) for a in e)
    return OptResult(
        best=cp,
        eta_value=eta,
        stationarity_residual=float(resid),
        trajectory_length=total_steps,
        restarts_used=max(restarts, 1),
        seed=seed,
        converged=conv,
        mode="fixed-xi" if fixed_xi else "free-xi",
        min_eta_seen=float(min_seen),
    )


def minimize_eta_sweep(
    xi: float, L: float, n_max: int, **opts
) -> list[OptResult]:
    """minimize_eta for every arc count n = 1..n_max."""
    return [minimize_eta(xi, L, n, **opts) for n in range(1, n_max + 1)]


@dataclass(frozen=True)
class PartitionOptResult:
    """Best cut-point configuration for the partition objective."""

    cuts: tuple[float, ...]
    k: int
    L: float
    n_per_part: int
    objective: float
    bound: float
    slack: float
    trajectory_length: int
    restarts_used: int
    seed: int
    converged: bool

    def to_json_dict(self) -> dict:
        return {
            "cuts": list(self.cuts),
            "k": self.k,
            "L": self.L,
            "n_per_part": self.n_per_part,
            "objective": self.objective,
            "bound": self.bound,
            "slack": self.slack,
            "trajectory_length": self.trajectory_length,
            "restarts_used": self.restarts_used,
            "seed": self.seed,
            "converged": self.converged,
        }

    def to_partition(self):
        from .circle import Circle, Partition

        parts = _parts_from_cuts(np.asarray(self.cuts), self.k, self.L)
        return Partition(
            Circle(self.L),
            tuple(normalize([(b[2 * i], b[2 * i + 1] - b[2 * i])
                             for i in range(len(b) // 2)], self.L)
                  for b in parts),
        )


def _parts_from_cuts(cuts: np.ndarray, k: int, L: float) -> list[np.ndarray]:
    """Per-colour bounds arrays for round-robin coloured segments."""
    M = len(cuts)
    parts: list[list[float]] = [[] for _ in range(k + 1)]
    for i in range(M):
        lo = cuts[i]
        hi = cuts[i + 1] if i + 1 < M else cuts[0] + L
        if hi > lo:
            parts[i % (k + 1)].extend((float(lo), float(hi)))
    return [np.asarray(p) for p in parts]


def _partition_objective(cuts: np.ndarray, k: int, L: float) -> float:
    return float(sum(kernels.phi_arcs(b, L) for b in _parts_from_cuts(cuts, k, L)))


def minimize_partition(
    k: int,
    L: float,
    n_per_part: int,
    restarts: int = 16,
    max_iters: int = 10_000,
    tol: float = 1e-9,
    seed: int = 0,
) -> PartitionOptResult:
    """Local search over interval partitions with round-robin colours.

    The circle is cut into (k+1)*n_per_part segments at movable cut points;
    segment i belongs to class i mod (k+1).  Gradient of the objective in a
    cut is the difference of the two neighbouring classes' window masses
    there; descent with backtracking, multistart as in minimize_eta.
    """
    if k < 0 or n_per_part < 1:
        raise DomainError("need k >= 0 and n_per_part >= 1")
    if L < 1.0:
        raise DomainError(f"perimeter must satisfy L >= 1, got {L}")
    M = (k + 1) * n_per_part
    seeds = np.random.SeedSequence(seed).spawn(max(restarts, 1))
    best = None
    total_steps = 0
    for r in range(max(restarts, 1)):
        if r == 0:
            cuts = np.array([i * L / M for i in range(M)])
        else:
            rng = np.random.Generator(np.random.PCG64(seeds[r]))
            cuts = np.sort(rng.random(M) * L)
        cuts, obj, steps, conv = _descend_cuts(cuts, k, L, max_iters, tol)
        total_steps += steps
        if best is None or obj < best[1]:
            best = (cuts, obj, conv)
    cuts, obj, conv = best
    bound = colouring_bound(k, L)
    return PartitionOptResult(
        cuts=tuple(float(c) for c in cuts),
        k=k,
        L=L,
        n_per_part=n_per_part,
        objective=obj,
        bound=bound,
        slack=obj - bound,
        trajectory_length=total_steps,
        restarts_used=max(restarts, 1),
        seed=seed,
        converged=conv,
    )


def _descend_cuts(cuts, k, L, max_iters, tol):
    obj = _partition_objective(cuts, k, L)
    accepted = 0
    converged = False
    M = len(cuts)
    kk = k + 1
    for _ in range(max_iters):
        if kk == 1:
            converged = True
            break
        parts = _parts_from_cuts(cuts, k, L)
        grad = np.empty(M)
        for i in range(M):
            left = (i - 1) % M % kk
            right = i % kk
            gl = kernels.g_window(parts[left], L, float(cuts[i])) if len(parts[left]) else 0.0
            gr = kernels.g_window(parts[right], L, float(cuts[i])) if len(parts[right]) else 0.0
            grad[i] = gl - gr
        gmax = float(np.max(np.abs(grad)))
        if gmax < tol:
            converged = True
            break
        step = 0.1 * L / max(gmax, 1.0)
        improved = False
        while step * gmax > _MIN_STEP_REL * L:
            cand = cuts - step * grad
            step *= 0.5
            d = np.diff(cand)
            if len(d) and d.min() < 0.0:
                continue
            if cand[-1] - cand[0] > L:
                continue
            cand = cand - (math.floor(cand[0] / L)) * L  # keep anchored near [0, L)
            cand_obj = _partition_objective(cand, k, L)
            if cand_obj < obj:
                cuts = cand
                obj = cand_obj
                accepted += 1
                improved = True
                break
        if not improved:
            converged = True
            break
    return cuts, obj, accepted, converged


def stationarity_report(A: ArcSet, tol: float) -> StationarityReport:
    """First-order optimality residuals, after density reduction to <= 1/2.

    Densities above one half are judged through the complement (the slack
    is the same for a set and its complement).  The interior is sampled on
    at least a thousand points of the set plus every profile breakpoint
    inside it.
    """
    L = A.L
    lam = measure(A)
    if lam > 0.5 * L:
        A = complement(A)
        lam = measure(A)
    xi = lam / L
    if xi == 0.0 or not A.arcs:
        return StationarityReport(
            boundary_residuals=(), interior_min=math.inf,
            tol=tol, passes=True, xi=xi,
        )
    phi0 = phi_coeff(xi)
    floor = xi / W(xi)
    bounds = A.bounds_array()
    residuals = tuple(
        abs(kernels.g_window(bounds, L, a) - phi0) for a in A.endpoints()
    )
    profile = g_profile(A)
    interior_min = math.inf
    for arc in A.arcs:
        segs = [(arc.start, min(arc.end, L))]
        if arc.end > L:
            segs.append((0.0, arc.end - L))
        for lo, hi in segs:
            if hi <= lo:
                continue
            npts = max(3, math.ceil(1000.0 * (hi - lo) / lam) + 1)
            xs = list(np.linspace(lo, hi, npts))
            xs.extend(x for x in profile.xs if lo < x < hi)
            for x in xs:
                v = kernels.g_window(bounds, L, float(x)) - floor
                if v < interior_min:
                    interior_min = v
    max_resid = max(residuals) if residuals else 0.0
    return StationarityReport(
        boundary_residuals=residuals,
        interior_min=float(interior_min),
        tol=tol,
        passes=(max_resid <= tol and interior_min >= -tol),
        xi=xi,
    )
