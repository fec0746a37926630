"""Closed-form frame bound tests against frozen references."""

import math

import pytest

import reference_values as ref
from thetaframe import (DomainError, FrameBounds, LatticeParams,
                        frame_bounds, frame_bounds_even, frame_bounds_odd,
                        lattice_params)

ULP = math.ulp(1.0)


def close(got, expected, err):
    return abs(got - expected) <= err + 4 * math.ulp(abs(expected))


class TestFrozenBounds:
    def test_even_square(self):
        fb = frame_bounds_even(2, 2.0 ** -0.5)
        assert close(fb.lower, ref.A_2_SQRT2, fb.error_bound)
        assert close(fb.upper, ref.B_2_SQRT2, fb.error_bound)
        assert fb.valid
        assert abs(fb.ratio - ref.SQRT2) < 1e-10

    def test_even_rect(self):
        fb = frame_bounds_even(2, 1.0)
        assert close(fb.lower, ref.A_2_1, fb.error_bound)
        assert close(fb.upper, ref.B_2_1, fb.error_bound)

    def test_odd_square(self):
        fb = frame_bounds_odd(3, 3.0 ** -0.5)
        assert close(fb.lower, ref.A_3_SQRT3, fb.error_bound)
        assert close(fb.upper, ref.B_3_SQRT3, fb.error_bound)

    def test_even_n4(self):
        fb = frame_bounds_even(4, 0.5)
        assert close(fb.lower, ref.A_4_HALF, fb.error_bound)
        assert close(fb.upper, ref.B_4_HALF, fb.error_bound)

    def test_critical_density_collapses(self):
        # n=1 at beta=1: lower bound is analytically zero, and the
        # computed value must be indistinguishable from zero
        fb = frame_bounds_odd(1, 1.0)
        assert abs(fb.lower) <= fb.error_bound
        assert not fb.valid
        assert fb.ratio == math.inf
        assert close(fb.upper, ref.B_1_1, fb.error_bound)

    def test_upper_coincidence(self):
        # B(1,1) equals A(2, 1/sqrt 2): same theta product after reparam
        fb1 = frame_bounds_odd(1, 1.0)
        fb2 = frame_bounds_even(2, 2.0 ** -0.5)
        assert abs(fb1.upper - fb2.lower) <= \
            fb1.error_bound + fb2.error_bound


class TestStructure:
    @pytest.mark.parametrize("n,beta", [(1, 0.8), (2, 0.6), (2, 1.0),
                                        (3, 0.4), (4, 0.5), (5, 0.3)])
    def test_ordering_and_validity(self, n, beta):
        fb = frame_bounds(lattice_params(n, beta))
        assert isinstance(fb, FrameBounds)
        assert fb.lower < fb.upper
        assert fb.error_bound > 0.0
        assert fb.valid == (fb.lower > fb.error_bound)
        if fb.lower > 0:
            assert fb.ratio == pytest.approx(fb.upper / fb.lower)

    @pytest.mark.parametrize("n", [2, 3, 5])
    @pytest.mark.parametrize("beta", [0.4, 0.9])
    def test_reparam_symmetry(self, n, beta):
        # swapping beta -> 1/(n beta) swaps the two theta arguments
        a = frame_bounds(lattice_params(n, beta))
        b = frame_bounds(lattice_params(n, 1.0 / (n * beta)))
        assert abs(a.lower - b.lower) <= a.error_bound + b.error_bound
        assert abs(a.upper - b.upper) <= a.error_bound + b.error_bound

    def test_square_lattice_ratio_decreases_with_n(self):
        ratios = [frame_bounds(lattice_params(n, n ** -0.5)).ratio
                  for n in (2, 3, 4)]
        assert ratios[0] > ratios[1] > ratios[2] > 1.0

    def test_dispatch_matches_direct_calls(self):
        via_dispatch = frame_bounds(lattice_params(2, 0.7))
        direct = frame_bounds_even(2, 0.7)
        assert via_dispatch == direct
        via_dispatch = frame_bounds(lattice_params(3, 0.7))
        direct = frame_bounds_odd(3, 0.7)
        assert via_dispatch == direct


class TestLatticeParams:
    def test_constructor_fills_alpha(self):
        p = lattice_params(4, 0.5)
        assert p.alpha == pytest.approx(0.5)
        assert p.parity == "even"
        q = lattice_params(3, 0.5)
        assert q.parity == "odd"

    def test_explicit_alpha_checked(self):
        p = lattice_params(2, 0.5, alpha=1.0)
        assert p.alpha == 1.0
        with pytest.raises(DomainError):
            lattice_params(2, 0.5, alpha=0.9)

    @pytest.mark.parametrize("n", [0, -1, 2.0, True])
    def test_bad_n(self, n):
        with pytest.raises(DomainError):
            lattice_params(n, 0.5)

    @pytest.mark.parametrize("beta", [0.0, -0.5, math.inf, math.nan])
    def test_bad_beta(self, beta):
        with pytest.raises(DomainError):
            lattice_params(2, beta)

    def test_parity_mismatch(self):
        with pytest.raises(DomainError):
            LatticeParams(alpha=0.5, beta=1.0, n=2, parity="odd")
        with pytest.raises(DomainError):
            LatticeParams(alpha=1.0 / 3, beta=1.0, n=3, parity="even")

    def test_density_mismatch(self):
        with pytest.raises(DomainError):
            LatticeParams(alpha=1.0, beta=1.0, n=2, parity="even")


class TestDomain:
    def test_parity_dispatch_rejects_wrong_n(self):
        with pytest.raises(DomainError):
            frame_bounds_even(3, 0.5)
        with pytest.raises(DomainError):
            frame_bounds_odd(2, 0.5)
        with pytest.raises(DomainError):
            frame_bounds_even(0, 0.5)

    def test_extreme_beta_outside_theta_domain(self):
        # 0.5 (n beta)^2 or 0.5 / beta^2 leaves the supported window
        with pytest.raises(DomainError):
            frame_bounds_even(2, 1000.0)
        with pytest.raises(DomainError):
            frame_bounds_even(2, 5e-4)

    def test_bad_tol(self):
        with pytest.raises(DomainError):
            frame_bounds_even(2, 0.7, tol=0.0)
