import math

import pytest

from arcphi import (
    DomainError,
    W,
    colouring_bound,
    density_bound,
    discrete_bound,
    fact21_check,
    lemma3_envelope,
    lemma3_random_check,
    phi_coeff,
)
from arcphi.bounds import random_admissible_profile
from arcphi.sampling import rng_from_seed


class TestW:
    def test_endpoints(self):
        assert W(0.0) == 1.0
        assert W(1.0) == 1.0

    def test_midpoint(self):
        assert W(0.5) == pytest.approx(math.sqrt(2) / 2)

    def test_quarter(self):
        assert W(0.25) == pytest.approx(math.sqrt(0.625))

    def test_symmetry_on_grid(self):
        for i in range(2001):
            xi = i / 2000
            assert abs(W(xi) - W(1 - xi)) < 1e-15

    def test_domain(self):
        with pytest.raises(DomainError):
            W(-0.1)
        with pytest.raises(DomainError):
            W(1.1)


class TestPhiCoeff:
    def test_half(self):
        assert phi_coeff(0.5) == 1.0

    def test_quarter(self):
        assert phi_coeff(0.25) == pytest.approx(1 - 0.5 / math.sqrt(0.625))

    def test_factorisation(self):
        for xi in (0.1, 0.3, 0.45, 0.5):
            w = W(xi)
            assert abs(phi_coeff(xi) - (w + 1) * (w + xi - 1) / (w * xi)) < 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            phi_coeff(0.0)


class TestClosedFormBounds:
    def test_density_endpoints(self):
        assert density_bound(0.0, 5.0) == pytest.approx(0.0)
        assert density_bound(1.0, 5.0) == pytest.approx(5.0)

    def test_density_values(self):
        assert density_bound(0.5, 2 * math.sqrt(2)) == pytest.approx(2 - math.sqrt(2))
        assert density_bound(1 / 6, 3.0) == pytest.approx(0.0495097567964, abs=1e-10)

    def test_colouring_values(self):
        assert colouring_bound(0, 3.0) == pytest.approx(3.0)
        assert colouring_bound(1, 10.0) == pytest.approx((math.sqrt(2) - 1) * 10)
        assert colouring_bound(2, 9 / math.sqrt(5)) == pytest.approx(
            (math.sqrt(5) - 2) * 9 / math.sqrt(5))

    def test_colouring_consistency_with_density(self):
        # k+1 equal densities: summed density slack equals the colouring rate
        for k in range(11):
            xi = 1.0 / (k + 1)
            lhs = (k + 1) * (xi + W(xi) - 1.0)
            assert abs(lhs - (math.sqrt(k * k + 1) - k)) < 1e-12

    def test_discrete_values(self):
        assert discrete_bound(1, 2, 4) == pytest.approx(-0.6862915010, abs=1e-9)
        assert discrete_bound(0, 1, 10) == pytest.approx(4.5)
        assert discrete_bound(1, 2, 8) == pytest.approx(0.6274169980, abs=1e-9)

    def test_discrete_domain(self):
        with pytest.raises(DomainError):
            discrete_bound(1, 5, 4)


class TestFact21:
    def test_tight_at_zero(self):
        assert (2 - 0.0) - 2 * W(0.0) == pytest.approx(0.0)

    def test_half_value(self):
        assert (2 - 0.5) - 2 * W(0.5) == pytest.approx(1.5 - math.sqrt(2))

    def test_grid(self):
        rep = fact21_check(10_000)
        assert rep.passes
        assert rep.slack >= -1e-12

    def test_needs_two_points(self):
        with pytest.raises(DomainError):
            fact21_check(1)


class TestEnvelopes:
    def test_triangle_case(self):
        case = lemma3_envelope(0.5, 0.5)
        assert case.case_id == "triangle"
        assert case.integral == pytest.approx(0.5 * 1.0 - 0.25 / 4)
        assert case.required == pytest.approx(2 * 0.5 * (math.sqrt(2) / 2 - 0.5) / 0.5)
        assert case.integral >= case.required

    def test_plateau_at_kernel_level(self):
        case = lemma3_envelope(0.5, 0.65)
        assert case.case_id == "plateau_xiW"
        c2 = 0.5 / W(0.5)
        assert case.integral == pytest.approx(c2 * 0.65 + (1.0 - c2) ** 2)
        assert case.integral >= case.required

    def test_plateau_at_alpha(self):
        case = lemma3_envelope(0.5, 0.9)
        assert case.case_id == "plateau_alpha"
        assert case.integral == pytest.approx(0.81 + 0.01)
        assert case.integral >= case.required

    def test_envelope_integral_matches_knots(self):
        for xi, alpha in [(0.5, 0.5), (0.5, 0.65), (0.5, 0.9), (0.3, 0.2),
                          (0.2, 0.1), (0.45, 0.6)]:
            case = lemma3_envelope(xi, alpha)
            assert case.envelope.integral() == pytest.approx(case.integral, abs=1e-12)

    def test_infeasible_alpha(self):
        with pytest.raises(DomainError):
            lemma3_envelope(0.3, phi_coeff(0.3) + 0.01)

    def test_grid_certificate(self):
        for i in range(1, 61):
            xi = 0.5 * i / 60
            phi0 = phi_coeff(xi)
            for j in range(60):
                alpha = min(phi0 * j / 59, phi0)
                case = lemma3_envelope(xi, alpha)
                assert case.integral >= case.required - 1e-9

    def test_case_boundaries_agree(self):
        # both adjacent formulas coincide at the case boundaries
        for xi in (0.1, 0.25, 0.4, 0.5):
            w = W(xi)
            phi0 = phi_coeff(xi)
            c1 = 2 * (1 - (1 - xi) / w)
            c2 = xi / w
            tri = c1 * phi0 - c1 * c1 / 4
            mid = c2 * c1 + (phi0 - c2) ** 2
            assert tri == pytest.approx(mid, abs=1e-12)
            mid2 = c2 * c2 + (phi0 - c2) ** 2
            alt = c2 * c2 + (phi0 - c2) ** 2
            assert mid2 == pytest.approx(alt)

    def test_plateau_alpha_lower_edge(self):
        # in the plateau-at-alpha regime, alpha is at least 2/3 of the level
        for i in range(1, 101):
            xi = 0.5 * i / 100
            phi0 = phi_coeff(xi)
            alpha = xi / W(xi)
            while alpha <= phi0:
                assert alpha >= (2.0 / 3.0) * phi0 - 1e-12
                alpha += 0.07 * phi0


class TestRandomProfiles:
    def test_envelope_is_admissible_profile(self):
        # the case envelope itself satisfies the hypotheses, so its integral
        # clears the requirement
        for xi, alpha in [(0.5, 0.5), (0.5, 0.65), (0.5, 0.9), (0.35, 0.4)]:
            case = lemma3_envelope(xi, alpha)
            floor = max(xi / W(xi), alpha)
            assert min(case.envelope.ys) >= floor - 1e-12
            assert all(abs(s) <= 1 + 1e-12 for s in case.envelope.slopes())

    def test_constant_profile(self):
        # h == phi_coeff is admissible and integrates to alpha * phi_coeff
        xi, alpha = 0.4, 0.5
        case = lemma3_envelope(xi, alpha)
        assert alpha * phi_coeff(xi) >= case.required - 1e-12

    def test_random_profiles_are_admissible(self):
        rng = rng_from_seed(5)
        for xi, alpha in [(0.4, 0.6), (0.5, 0.3), (0.25, 0.2)]:
            floor = max(xi / W(xi), alpha)
            for _ in range(50):
                h = random_admissible_profile(xi, alpha, rng)
                assert h.ys[0] == pytest.approx(phi_coeff(xi))
                assert h.ys[-1] == pytest.approx(phi_coeff(xi))
                assert min(h.ys) >= floor - 1e-12
                assert all(abs(s) <= 1 + 1e-9 for s in h.slopes())

    def test_randomized_certificate(self):
        rep = lemma3_random_check(0.4, 0.6, 1000, seed=0)
        assert rep.passes
        assert rep.slack >= -1e-9

    def test_infeasible_rejected(self):
        with pytest.raises(DomainError):
            lemma3_random_check(0.3, 2.0, 10, seed=0)


class TestMinkowskiConsequence:
    def test_simplex_samples(self):
        rng = rng_from_seed(9)
        for _ in range(500):
            k = int(rng.integers(0, 6))
            xis = rng.dirichlet([1.0] * (k + 1))
            total = sum(W(float(x)) for x in xis)
            assert total >= math.sqrt(k * k + 1) - 1e-9
