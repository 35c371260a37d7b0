import pytest

from arcphi import (
    CapacityError,
    DiscreteColouring,
    DiscreteInstance,
    DomainError,
    alpha_estimate,
    check_thm3,
    f_brute,
    f_exact_dp,
    mono_edges,
    psi_m,
    subadditivity_check,
)
from arcphi.sampling import random_colouring, rng_from_seed


class TestPsi:
    def test_sparse(self):
        assert psi_m({1, 3, 5}, 1) == 0

    def test_path_block(self):
        assert psi_m({1, 2, 3, 4, 5}, 2) == 7

    def test_mixed(self):
        assert psi_m({1, 2, 4}, 3) == 3

    def test_matches_pair_enumeration(self):
        rng = rng_from_seed(1)
        for _ in range(50):
            n = int(rng.integers(1, 25))
            m = int(rng.integers(1, 6))
            A = sorted(set(int(v) for v in rng.integers(1, 40, size=n)))
            naive = sum(1 for x in A for y in A if x < y <= x + m)
            assert psi_m(A, m) == naive

    def test_window_must_be_positive(self):
        with pytest.raises(DomainError):
            psi_m({1, 2}, 0)


class TestMonoEdges:
    def test_proper_alternating(self):
        c = DiscreteColouring(1, tuple([1, 2] * 5))
        assert mono_edges(c, 1) == 0

    def test_single_class(self):
        c = DiscreteColouring(0, (1,) * 5)
        assert mono_edges(c, 2) == psi_m(range(1, 6), 2) == 7

    def test_small(self):
        c = DiscreteColouring(1, (1, 2, 2, 1))
        assert mono_edges(c, 2) == 1

    def test_equals_class_sum(self):
        rng = rng_from_seed(2)
        for _ in range(50):
            k = int(rng.integers(0, 4))
            n = int(rng.integers(1, 30))
            m = int(rng.integers(1, 5))
            c = random_colouring(rng, k, n)
            assert mono_edges(c, m) == sum(psi_m(cls, m) for cls in c.classes())


class TestBrute:
    def test_alternating_path(self):
        f, w = f_brute(DiscreteInstance(1, 1, 5))
        assert f == 0
        assert w.colors == (1, 2, 1, 2, 1)

    def test_triangle_forces_one(self):
        f, w = f_brute(DiscreteInstance(1, 2, 4))
        assert f == 1
        assert w.as_string() == "1221"

    def test_single_colour(self):
        f, _ = f_brute(DiscreteInstance(0, 2, 5))
        assert f == 7

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            f_brute(DiscreteInstance(2, 2, 40))


class TestDp:
    def test_eight_vertices(self):
        f, w = f_exact_dp(DiscreteInstance(1, 2, 8))
        assert f == 3
        assert w.as_string() == "12211221"

    def test_path_always_two_colourable(self):
        for n in range(1, 21):
            assert f_exact_dp(DiscreteInstance(1, 1, n))[0] == 0

    def test_squared_path_three_colourable(self):
        for n in range(1, 13):
            assert f_exact_dp(DiscreteInstance(2, 2, n))[0] == 0

    def test_matches_brute_with_witness(self):
        for k in range(3):
            for m in range(1, 4):
                for n in range(1, 10):
                    fb, wb = f_brute(DiscreteInstance(k, m, n))
                    fd, wd = f_exact_dp(DiscreteInstance(k, m, n))
                    assert fb == fd, (k, m, n)
                    assert wb.colors == wd.colors, (k, m, n)

    def test_single_colour_closed_form(self):
        for m in range(1, 4):
            for n in range(m, 15):
                f, _ = f_exact_dp(DiscreteInstance(0, m, n))
                assert f == m * n - m * (m + 1) // 2

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            f_exact_dp(DiscreteInstance(2, 20, 30))

    def test_monotonicity(self):
        table = {
            (k, m, n): f_exact_dp(DiscreteInstance(k, m, n))[0]
            for k in range(3)
            for m in range(1, 4)
            for n in range(1, 11)
        }
        for (k, m, n), f in table.items():
            if n > 1:
                assert f >= table[(k, m, n - 1)]
            if m > 1:
                assert f >= table[(k, m - 1, n)]
            if k > 0:
                assert f <= table[(k - 1, m, n)]


class TestBoundCertification:
    def test_spot_instances(self):
        for k, m, n in [(1, 2, 8), (0, 1, 10), (1, 2, 4)]:
            rep = check_thm3(DiscreteInstance(k, m, n))
            assert rep.passes

    def test_requires_n_at_least_m(self):
        with pytest.raises(DomainError):
            check_thm3(DiscreteInstance(1, 5, 3))

    def test_small_sweep(self):
        for k in range(3):
            for m in range(1, 4):
                for n in range(m, 11):
                    assert check_thm3(DiscreteInstance(k, m, n)).passes


class TestAlpha:
    def test_proper_colourable_vanishes(self):
        lower, upper = alpha_estimate(1, 1, 10)
        assert upper <= 0.1 + 1e-12
        assert lower < 0

    def test_single_colour_rate(self):
        lower, upper = alpha_estimate(0, 2, 8)
        assert upper == pytest.approx(2.0)
        assert lower == pytest.approx(1.5)

    def test_bracket_order(self):
        lower, upper = alpha_estimate(1, 2, 12)
        assert lower <= upper


class TestSubadditivity:
    def test_examples(self):
        assert subadditivity_check(1, 2, 4, 4).passes
        assert subadditivity_check(0, 1, 3, 3).passes
        assert subadditivity_check(1, 1, 6, 7).passes

    def test_exact_integers(self):
        rep = subadditivity_check(0, 1, 3, 3)
        assert rep.detail == {"f_joint": 5, "f_left": 2, "f_right": 2}


class TestColouringType:
    def test_validation(self):
        with pytest.raises(DomainError):
            DiscreteColouring(1, (1, 3))
        with pytest.raises(DomainError):
            DiscreteColouring(-1, (1,))

    def test_json_round_trip(self):
        c = DiscreteColouring(2, (1, 3, 2, 1))
        assert DiscreteColouring.from_json_dict(c.to_json_dict()) == c
