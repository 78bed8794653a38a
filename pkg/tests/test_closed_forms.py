"""Hand-derived amplitude formulas against the two numeric routes."""

import cmath
import math

import numpy as np
import pytest

from deltascatter import (
    DimensionlessSystem,
    DomainError,
    ResonancePoleError,
    amplitudes,
    double_equal,
    double_general,
    double_resonance_strength,
    single,
    six_equal,
    solve_amplitudes,
    triple,
)


def both_routes(xi, y):
    sys = DimensionlessSystem(xi=xi, y=y)
    sol = solve_amplitudes(sys)
    t2, r2 = amplitudes(sys)
    assert sol.t == pytest.approx(t2, abs=1e-10)
    assert sol.r == pytest.approx(r2, abs=1e-10)
    return sol.t, sol.r


class TestSingle:
    def test_transparent_at_zero_strength(self):
        assert single(0.0) == (1.0 + 0.0j, 0.0j)

    def test_unit_strength_rationals(self):
        t, r = single(1.0)
        assert t == pytest.approx((4 - 2j) / 5, abs=1e-15)
        assert r == pytest.approx((-1 - 2j) / 5, abs=1e-15)

    def test_matches_solvers_on_grid(self):
        for xi in np.linspace(-4.0, 4.0, 20):
            for y0 in (-2.0, 0.0, 1.3):
                t_ref, r_ref = single(float(xi), y0)
                t, r = both_routes((float(xi),), (y0,))
                assert t == pytest.approx(t_ref, abs=1e-9)
                assert r == pytest.approx(r_ref, abs=1e-9)

    def test_translation_phase_on_reflection(self):
        # r picks up e^{2i y0} while t stays put.
        for y0 in (0.7, -1.9, 4.0):
            t0, r0 = single(1.5, 0.0)
            t1, r1 = single(1.5, y0)
            assert t1 == pytest.approx(t0, abs=1e-15)
            assert r1 / r0 == pytest.approx(cmath.exp(2j * y0), abs=1e-14)

    def test_unitarity(self):
        for xi in np.linspace(-5.0, 5.0, 21):
            t, r = single(float(xi))
            assert abs(t) ** 2 + abs(r) ** 2 == pytest.approx(1.0, abs=1e-12)


class TestDoubleEqual:
    def test_two_unit_sites_reference(self):
        t, r = double_equal(1.0, 1.0)
        assert r == pytest.approx(-0.059736227127 - 0.690341414458j, abs=1e-11)
        assert t == pytest.approx(0.335810679642 - 0.638037226258j, abs=1e-11)

    def test_matches_solvers_on_grid(self):
        for xi in np.linspace(-4.0, 4.0, 20):
            for dt in np.linspace(0.1, 3.0, 20):
                t_ref, r_ref = double_equal(float(xi), float(dt))
                t, r = both_routes((float(xi),) * 2, (0.0, float(dt)))
                assert t == pytest.approx(t_ref, abs=1e-9)
                assert r == pytest.approx(r_ref, abs=1e-9)

    def test_unitarity(self):
        for xi in np.linspace(-5.0, 5.0, 11):
            for dt in (0.3, 1.0, 2.4):
                t, r = double_equal(float(xi), dt)
                assert abs(t) ** 2 + abs(r) ** 2 == pytest.approx(1.0, abs=1e-12)

    def test_rejects_nonpositive_gap(self):
        with pytest.raises(DomainError):
            double_equal(1.0, 0.0)


class TestDoubleGeneral:
    def test_reduces_to_equal_strengths(self):
        for xi in (-2.0, 0.5, 3.0):
            for dt in (0.5, 1.7):
                assert double_general(xi, xi, dt) == pytest.approx(
                    double_equal(xi, dt), abs=1e-14
                )

    def test_zero_second_strength_is_single_site(self):
        t_ref, r_ref = single(1.2, 0.0)
        t, r = double_general(1.2, 0.0, 2.0)
        assert t == pytest.approx(t_ref, abs=1e-14)
        assert r == pytest.approx(r_ref, abs=1e-14)

    def test_zero_first_strength_is_translated_single_site(self):
        dt = 1.4
        t_ref, r_ref = single(-0.8, dt)
        t, r = double_general(0.0, -0.8, dt)
        assert t == pytest.approx(t_ref, abs=1e-14)
        assert r == pytest.approx(r_ref, abs=1e-14)

    def test_mixed_sign_pair_reference(self):
        # Frozen from the matching solve for strengths (0.5, -1) two units
        # apart; all three routes agree on these digits.
        t, r = double_general(0.5, -1.0, 2.0)
        assert r == pytest.approx(0.210449066162 - 0.529307629899j, abs=1e-11)
        assert t == pytest.approx(0.815183380636 + 0.104979423778j, abs=1e-11)

    def test_matches_solvers_on_grid(self):
        values = np.linspace(-4.0, 4.0, 20)
        for xi1, xi2 in zip(values, values[::-1]):
            for dt in np.linspace(0.1, 3.0, 20):
                t_ref, r_ref = double_general(float(xi1), float(xi2), float(dt))
                t, r = both_routes((float(xi1), float(xi2)), (0.0, float(dt)))
                assert t == pytest.approx(t_ref, abs=1e-9)
                assert r == pytest.approx(r_ref, abs=1e-9)

    def test_unitarity(self):
        rng = np.random.default_rng(17)
        for _ in range(200):
            xi1, xi2 = rng.uniform(-5.0, 5.0, size=2)
            dt = rng.uniform(0.05, 3.0)
            t, r = double_general(xi1, xi2, dt)
            assert abs(t) ** 2 + abs(r) ** 2 == pytest.approx(1.0, abs=1e-12)


class TestTriple:
    def test_staircase_reference(self):
        t, r = triple(1.0, 2.0, 3.0, 1.0, 2.0)
        assert r == pytest.approx(0.143456498393 - 0.908479927808j, abs=1e-11)
        assert t == pytest.approx(-0.391735680065 + 0.025052161646j, abs=1e-11)

    def test_transparent_at_zero_strengths(self):
        t, r = triple(0.0, 0.0, 0.0, 1.0, 1.0)
        assert t == pytest.approx(1.0, abs=1e-14)
        assert r == pytest.approx(0.0, abs=1e-14)

    def test_matches_solvers_on_grid(self):
        rng = np.random.default_rng(29)
        for _ in range(150):
            xi = rng.uniform(-4.0, 4.0, size=3)
            dt1, dt2 = rng.uniform(0.1, 3.0, size=2)
            t_ref, r_ref = triple(*xi, dt1, dt2)
            t, r = both_routes(tuple(xi), (0.0, dt1, dt1 + dt2))
            assert t == pytest.approx(t_ref, abs=1e-9)
            assert r == pytest.approx(r_ref, abs=1e-9)

    def test_unitarity(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            xi = rng.uniform(-5.0, 5.0, size=3)
            dt1, dt2 = rng.uniform(0.05, 3.0, size=2)
            t, r = triple(*xi, dt1, dt2)
            assert abs(t) ** 2 + abs(r) ** 2 == pytest.approx(1.0, abs=1e-12)


class TestSixEqual:
    def test_table_validation_grid(self):
        """Coefficient-table guard: the closed form must match the direct
        solve at a 3x3 grid of strengths and gaps before anything else in
        the suite may use it as an oracle."""
        for xi in (0.5, 1.0, 2.0):
            for dt in (0.5, 1.0, 2.0):
                sys = DimensionlessSystem.from_gaps((xi,) * 6, (dt,) * 5)
                sol = solve_amplitudes(sys)
                t, r = six_equal(xi, dt)
                assert t == pytest.approx(sol.t, abs=1e-9), (xi, dt)
                assert r == pytest.approx(sol.r, abs=1e-9), (xi, dt)

    def test_unit_strength_probabilities(self):
        t, r = six_equal(1.0, 1.0)
        assert abs(t) ** 2 == pytest.approx(0.236, abs=5e-3)
        assert abs(r) ** 2 == pytest.approx(0.764, abs=5e-3)

    def test_strong_sites_nearly_opaque(self):
        t, r = six_equal(2.0, 1.0)
        assert abs(t) ** 2 == pytest.approx(0.0001, abs=1e-3)
        assert abs(r) ** 2 == pytest.approx(0.9998, abs=1e-3)

    def test_half_strength_unit_gap_probabilities(self):
        # Soft sites at unit spacing: mostly transparent.  (At dt = 2 the
        # same strength gives T = 0.9492; see the acceptance suite notes.)
        t, r = six_equal(0.5, 1.0)
        assert abs(t) ** 2 == pytest.approx(0.8902, abs=5e-3)
        assert abs(r) ** 2 == pytest.approx(0.1097, abs=5e-3)

    def test_merging_limit_is_one_strong_site(self):
        # Six sites squeezed together act like one site of six-fold strength.
        t_ref, r_ref = single(6 * 0.7, 0.0)
        t, r = six_equal(0.7, 1e-8)
        assert t == pytest.approx(t_ref, abs=1e-6)
        assert r == pytest.approx(r_ref, abs=1e-6)

    def test_unitarity(self):
        for xi in np.linspace(-3.0, 3.0, 13):
            for dt in (0.5, 1.0, 2.0):
                t, r = six_equal(float(xi), dt)
                assert abs(t) ** 2 + abs(r) ** 2 == pytest.approx(1.0, abs=1e-12)


class TestDoubleResonanceStrength:
    def test_quarter_wave_gap_needs_no_potential(self):
        assert double_resonance_strength(math.pi / 2) == pytest.approx(0.0, abs=1e-12)

    def test_unit_gap_value(self):
        assert double_resonance_strength(1.0) == pytest.approx(-1.284185231869, abs=1e-11)

    @pytest.mark.parametrize("dt", [0.5, 1.0, 2.0])
    def test_transmission_is_perfect_there(self, dt):
        xi = double_resonance_strength(dt)
        t, r = double_equal(xi, dt)
        assert abs(r) ** 2 <= 1e-10
        assert abs(t) ** 2 == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("dt", [math.pi, 2 * math.pi, 1e-12, 3 * math.pi + 1e-10])
    def test_poles_are_rejected(self, dt):
        with pytest.raises(ResonancePoleError):
            double_resonance_strength(dt)
