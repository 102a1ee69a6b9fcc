import math
from fractions import Fraction

import pytest

from paracyl.field import integer_branch_spectrum
from paracyl.ljmodel import (
    LJSpec,
    R_MIN_FACTOR,
    bound_levels,
    curvature_matched_k,
    estimate_gamma_sq,
    fit_oscillator,
    harmonic_curve,
    lj_minimum,
    lj_potential,
)
from paracyl.numerics import golden_section_minimize

UNIT = LJSpec(epsilon=1.0, sigma=1.0, gamma_sq=2)


class TestSpec:
    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            LJSpec(0.0, 1.0, 1)
        with pytest.raises(ValueError):
            LJSpec(1.0, -1.0, 1)
        with pytest.raises(ValueError):
            LJSpec(1.0, 1.0, 0)


class TestPotential:
    def test_zero_at_sigma(self):
        assert lj_potential(1.0, UNIT) == 0.0

    def test_depth_at_minimum(self):
        assert lj_potential(R_MIN_FACTOR, UNIT) == pytest.approx(-1.0, rel=1e-14)

    def test_at_twice_sigma(self):
        assert lj_potential(2.0, UNIT) == pytest.approx(4.0 * (2.0**-12 - 2.0**-6), rel=1e-15)

    def test_rejects_nonpositive_separation(self):
        with pytest.raises(ValueError):
            lj_potential(0.0, UNIT)
        with pytest.raises(ValueError):
            lj_potential(-1.0, UNIT)

    def test_limits(self):
        assert -1e-6 < lj_potential(1e3, UNIT) < 0.0
        assert lj_potential(0.05, UNIT) > 1e10


class TestMinimum:
    def test_position(self):
        r_min, _ = lj_minimum(LJSpec(2.0, 1.0, 3))
        assert r_min == pytest.approx(1.122462048309373, rel=1e-15)

    def test_depth(self):
        assert lj_minimum(LJSpec(3.5, 0.8, 2))[1] == -3.5

    def test_stationary_by_central_difference(self):
        r_min, _ = lj_minimum(UNIT)
        h = 1e-6
        slope = (lj_potential(r_min + h, UNIT) - lj_potential(r_min - h, UNIT)) / (2 * h)
        assert abs(slope) < 1e-9

    def test_golden_section_lands_on_it(self):
        spec = LJSpec(1.0, 1.0, 4)
        r_num, u_num = golden_section_minimize(lambda r: lj_potential(r, spec), 0.8, 2.0)
        r_min, u_min = lj_minimum(spec)
        assert r_num == pytest.approx(r_min, abs=1e-8)
        assert u_num == pytest.approx(u_min, abs=1e-10)


class TestFitOscillator:
    def test_quarter_omega(self):
        assert fit_oscillator(LJSpec(1.0, 1.0, 4)).omega == 0.25

    def test_direct_inversion(self):
        assert fit_oscillator(LJSpec(2.0, 1.0, 1)).omega == 2.0

    def test_defining_identity(self):
        import random

        rng = random.Random(3)
        for _ in range(8):
            spec = LJSpec(rng.uniform(0.1, 5.0), rng.uniform(0.1, 3.0), rng.randint(1, 50))
            osc = fit_oscillator(spec, hbar=rng.uniform(0.5, 2.0))
            assert osc.hbar * osc.omega * spec.gamma_sq == pytest.approx(spec.epsilon, rel=1e-14)


class TestBoundLevels:
    def test_two_state_well(self):
        assert bound_levels(UNIT) == [(-2, -0.75), (-1, -0.25)]

    def test_single_state_well(self):
        assert bound_levels(LJSpec(1.0, 1.0, 1)) == [(-1, -0.5)]

    @pytest.mark.parametrize("g", [1, 2, 3, 7, 25, 100])
    def test_count_range_and_exact_rational_values(self, g):
        spec = LJSpec(1.0, 1.0, g)
        levels = bound_levels(spec)
        assert len(levels) == g
        assert [m for m, _ in levels] == list(range(-g, 0))
        energies = [e for _, e in levels]
        assert all(-1.0 < e < 0.0 for e in energies)
        assert energies == sorted(energies)
        # levels are the correctly-rounded image of the exact rational ladder
        assert energies == [float(Fraction(2 * m + 1, 2 * g)) for m in range(-g, 0)]
        if g > 1:
            spacing = 1.0 / g
            for a, b in zip(energies, energies[1:]):
                assert b - a == pytest.approx(spacing, rel=1e-13)

    def test_edges(self):
        levels = bound_levels(LJSpec(2.0, 1.0, 4))
        assert levels[0][1] == pytest.approx(-2.0 + 2.0 / 8.0, rel=1e-15)
        assert levels[-1][1] == pytest.approx(-2.0 / 8.0, rel=1e-15)

    @pytest.mark.parametrize("g", [1, 2, 3, 4, 9])
    def test_matches_integer_branch_negative_subset(self, g):
        spec = LJSpec(1.0, 1.0, g)
        osc = fit_oscillator(spec)
        branch = integer_branch_spectrum(g, -1, osc)
        levels = bound_levels(spec)
        assert len(branch) == len(levels)
        for (m_lj, e_lj), (m_br, e_br, _) in zip(levels, branch):
            assert m_lj == m_br
            assert e_lj == pytest.approx(e_br, abs=1e-12)


class TestEstimateGammaSq:
    def test_exact_quarter_spacing(self):
        assert estimate_gamma_sq(1.0, 0.25) == (4, 0.0)

    def test_single_state(self):
        assert estimate_gamma_sq(1.0, 1.0) == (1, 0.0)

    def test_nearest_integer_rounding(self):
        g, residual = estimate_gamma_sq(1.0, 0.3)
        assert g == 3
        assert residual == pytest.approx(abs(10.0 / 3.0 - 3.0), rel=1e-12)

    def test_round_trip_recovers_all_counts(self):
        assert all(estimate_gamma_sq(1.0, 1.0 / g)[0] == g for g in range(1, 1001))

    def test_spacing_above_depth_warns_and_clamps(self):
        with pytest.warns(UserWarning):
            g, residual = estimate_gamma_sq(1.0, 1.5)
        assert g == 1
        assert residual == pytest.approx(1.0 / 3.0, rel=1e-12)

    def test_rejects_nonpositive_spacing(self):
        with pytest.raises(ValueError):
            estimate_gamma_sq(1.0, 0.0)
        with pytest.raises(ValueError):
            estimate_gamma_sq(-1.0, 0.5)


class TestHarmonicCurve:
    def test_vertex(self):
        spec = LJSpec(1.0, 1.0, 4)
        assert harmonic_curve(R_MIN_FACTOR, spec, 70.0) == -1.0

    def test_reference_offset(self):
        spec = LJSpec(1.0, 1.0, 4)
        assert harmonic_curve(R_MIN_FACTOR + 0.1, spec, 70.0) == pytest.approx(-0.65, abs=1e-12)

    def test_even_about_vertex(self):
        spec = LJSpec(1.0, 1.0, 4)
        for d in (0.01, 0.1, 0.3):
            assert harmonic_curve(R_MIN_FACTOR + d, spec, 70.0) == pytest.approx(
                harmonic_curve(R_MIN_FACTOR - d, spec, 70.0), rel=1e-12
            )

    def test_rejects_nonpositive_force_constant(self):
        with pytest.raises(ValueError):
            harmonic_curve(1.0, UNIT, 0.0)


class TestCurvatureMatchedK:
    def test_value(self):
        assert curvature_matched_k(LJSpec(1.0, 1.0, 4)) == pytest.approx(
            72.0 / 2.0 ** (1.0 / 3.0), rel=1e-15
        )

    def test_matches_numeric_second_derivative(self):
        spec = LJSpec(1.3, 0.9, 4)
        r_min, _ = lj_minimum(spec)
        h = 1e-4
        num = (
            lj_potential(r_min + h, spec) - 2.0 * lj_potential(r_min, spec) + lj_potential(r_min - h, spec)
        ) / h**2
        assert curvature_matched_k(spec) == pytest.approx(num, rel=1e-5)
