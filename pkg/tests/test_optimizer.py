import math

import numpy as np
import pytest

from arcphi import (
    ConfigPoint,
    DegenerateConfigError,
    DomainError,
    W,
    eta,
    eta_gradient,
    eval_g,
    minimize_eta,
    minimize_partition,
    normalize,
    phi_coeff,
    stationarity_report,
)

SQRT2 = math.sqrt(2)


def random_interior_config(rng, margin=1e-3):
    L = float(rng.uniform(1.5, 10.0))
    n = int(rng.integers(1, 5))
    while True:
        pts = np.sort(rng.random(2 * n)) * L * 0.96 + 0.02 * L
        if np.diff(pts).min() > margin:
            return ConfigPoint(tuple(float(v) for v in pts), L)


class TestGradient:
    def test_zero_at_tight_configuration(self):
        L = 2 * SQRT2
        p = ConfigPoint((0.25 * L / 2, 0.25 * L / 2 + L / 4,
                         0.25 * L / 2 + L / 2, 0.25 * L / 2 + 3 * L / 4), L)
        # equispaced two-arc configuration at density 1/2 (rotated inward)
        g = eta_gradient(p)
        assert max(abs(v) for v in g) <= 1e-9

    def test_matches_central_differences(self, rng):
        checked = 0
        worst = 0.0
        while checked < 100:
            p = random_interior_config(rng)
            grad = eta_gradient(p)
            e = list(p.endpoints)
            h = 1e-6
            for i in range(len(e)):
                ep = e.copy()
                em = e.copy()
                ep[i] += h
                em[i] -= h
                if any(b <= a for a, b in zip(ep, ep[1:])):
                    continue
                if any(b <= a for a, b in zip(em, em[1:])):
                    continue
                if em[0] < 0 or ep[-1] > p.L:
                    continue
                fd = (
                    eta(ConfigPoint(tuple(ep), p.L).to_arcset())
                    - eta(ConfigPoint(tuple(em), p.L).to_arcset())
                ) / (2 * h)
                worst = max(worst, abs(fd - grad[i]))
                checked += 1
        assert worst <= 1e-4

    def test_single_arc_right_endpoint(self):
        p = ConfigPoint((0.0, 0.5), 3.0)
        g = eta_gradient(p)
        A = p.to_arcset()
        expected = eval_g(A, 0.5) - phi_coeff(0.5 / 3.0)
        assert g[1] == pytest.approx(expected, abs=1e-12)

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateConfigError):
            eta_gradient(ConfigPoint((0.3, 0.3, 0.5, 0.9), 3.0))
        with pytest.raises(DegenerateConfigError):
            eta_gradient(ConfigPoint((0.0, 0.5, 2.0, 3.0), 3.0))


class TestMinimizeEta:
    def test_finds_tight_configuration(self):
        res = minimize_eta(0.5, 2 * SQRT2, 2, restarts=16, seed=0)
        assert res.eta_value <= 1e-7
        assert res.min_eta_seen >= -1e-9

    def test_single_arc_class(self):
        res = minimize_eta(0.5, 2 * SQRT2, 1, restarts=4, seed=0)
        assert res.eta_value == pytest.approx(2 * SQRT2 - 2.5, abs=1e-9)
        assert res.eta_value > 0

    def test_three_isolated_arcs_optimum(self):
        # closed form: three equal arcs, far apart
        res = minimize_eta(0.3, 5.0, 3, restarts=16, seed=0)
        expected = 0.375 - (0.3 + W(0.3) - 1.0) * 5.0
        assert res.eta_value == pytest.approx(expected, abs=1e-7)

    def test_never_below_bound(self):
        for seed in (0, 1, 2):
            res = minimize_eta(0.35, 4.0, 2, restarts=8, seed=seed)
            assert res.min_eta_seen >= -1e-9

    def test_descent_returns_best_evaluated(self):
        # accepted steps only ever decrease eta, so the returned value must
        # equal the minimum over every configuration the run evaluated
        for seed in (0, 3):
            res = minimize_eta(0.4, 6.0, 3, restarts=6, seed=seed)
            assert res.eta_value == res.min_eta_seen

    def test_converged_minima_satisfy_first_order_conditions(self):
        # whenever the free gradient is small at the optimum, the
        # first-order report must pass at the coarser tolerance
        for xi, L, n in [(0.5, 2 * SQRT2, 2), (0.25, 4 / W(0.25), 1)]:
            res = minimize_eta(xi, L, n, restarts=8, seed=0)
            if res.stationarity_residual <= 1e-6:
                rep = stationarity_report(res.best.to_arcset(), tol=1e-4)
                assert rep.passes

    def test_complement_reduction(self):
        a = minimize_eta(0.35, 4.0, 2, restarts=8, seed=0)
        b = minimize_eta(0.65, 4.0, 2, restarts=8, seed=0)
        assert a.eta_value == pytest.approx(b.eta_value, abs=1e-6)

    def test_deterministic(self):
        r1 = minimize_eta(0.4, 3.0, 2, restarts=4, seed=7)
        r2 = minimize_eta(0.4, 3.0, 2, restarts=4, seed=7)
        assert r1.eta_value == r2.eta_value
        assert r1.best.endpoints == r2.best.endpoints

    def test_free_mode_never_below_bound(self):
        res = minimize_eta(0.3, 3.0, 2, restarts=6, seed=0, fixed_xi=False)
        assert res.min_eta_seen >= -1e-9
        assert res.eta_value <= minimize_eta(0.3, 3.0, 2, restarts=6, seed=0).eta_value + 1e-9

    def test_infeasible_density(self):
        with pytest.raises(DomainError):
            minimize_eta(1.2, 3.0, 2)
        with pytest.raises(DomainError):
            minimize_eta(0.0, 3.0, 2)

    def test_sweep_over_arc_counts(self):
        from arcphi import minimize_eta_sweep

        results = minimize_eta_sweep(0.5, 2 * SQRT2, 3, restarts=4, seed=0)
        assert len(results) == 3
        # n = 2 matches W(xi) * L, so the sweep bottoms out there
        assert min(r.eta_value for r in results) == results[1].eta_value
        assert results[1].eta_value <= 1e-7

    def test_surplus_arcs_collapse_to_optimum(self):
        # starting with more arcs than the optimum needs, the search drops
        # the surplus and still reaches the tight two-arc configuration
        for n in (3, 4):
            res = minimize_eta(0.5, 2 * SQRT2, n, restarts=16, seed=0)
            assert res.eta_value <= 1e-7
            assert res.best.to_arcset().arcs and len(res.best.to_arcset().arcs) == 2


class TestMinimizePartition:
    def test_single_colour_exact(self):
        res = minimize_partition(0, 3.0, 2, restarts=2, seed=0)
        assert res.objective == pytest.approx(3.0)
        assert res.slack == pytest.approx(0.0, abs=1e-12)

    def test_three_colour_equality(self):
        res = minimize_partition(2, 9 / math.sqrt(5), 3, restarts=8, seed=0)
        assert res.slack <= 1e-6
        assert res.slack >= -1e-9

    def test_two_colours_no_divisibility(self):
        res = minimize_partition(1, 5.0, 2, restarts=8, seed=0)
        assert res.slack >= -1e-9
        # all four segments at length >= 1 pin the objective at L - M/2
        assert res.objective == pytest.approx(3.0, abs=1e-6)

    def test_partition_export(self):
        res = minimize_partition(2, 9 / math.sqrt(5), 3, restarts=4, seed=0)
        part = res.to_partition()
        assert len(part.parts) == 3


class TestStationarityReport:
    def test_tight_configuration_passes(self):
        res = minimize_eta(0.5, 2 * SQRT2, 2, restarts=8, seed=0)
        rep = stationarity_report(res.best.to_arcset(), tol=1e-4)
        assert rep.passes

    def test_single_long_arc_fails_boundary(self):
        A = normalize([(0, 1.2)], 3)
        rep = stationarity_report(A, tol=1e-4)
        assert not rep.passes
        assert max(rep.boundary_residuals) == pytest.approx(
            1.0 - phi_coeff(0.4), abs=1e-12)
        assert rep.interior_min >= -1e-12

    def test_full_circle_trivially_passes(self):
        A = normalize([(0, 3)], 3)
        rep = stationarity_report(A, tol=1e-6)
        assert rep.passes
        assert rep.boundary_residuals == ()

    def test_density_reduction(self):
        # density above 1/2 is judged through the complement
        A = normalize([(0, 2.4)], 3)
        rep = stationarity_report(A, tol=1e-3)
        assert rep.xi == pytest.approx(0.2)
