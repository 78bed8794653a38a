"""Transfer-matrix route: single-site matrix, products, amplitude extraction."""

import numpy as np
import pytest

from deltascatter import (
    DegenerateMatrixError,
    DimensionlessSystem,
    TransferMatrix,
    amplitudes,
    amplitudes_from_matrix,
    delta_matrix,
    single,
    solve_amplitudes,
    total_matrix,
)


def random_system(rng, max_sites=6):
    n = int(rng.integers(1, max_sites + 1))
    xi = tuple(rng.uniform(-5.0, 5.0, size=n))
    y0 = float(rng.uniform(-2.0, 2.0))
    y = tuple(y0 + np.cumsum(np.concatenate([[0.0], rng.uniform(0.05, 3.0, size=n - 1)])))
    return DimensionlessSystem(xi=xi, y=y)


class TestDeltaMatrix:
    def test_zero_strength_is_identity(self):
        m = delta_matrix(0.0, 1.3)
        assert (m.m11, m.m12, m.m21, m.m22) == pytest.approx((1.0, 0.0, 0.0, 1.0), abs=0.0)

    def test_unit_determinant_exactly(self):
        for xi, y0 in [(2.0, 1.0), (-3.5, 0.2), (0.7, -4.0)]:
            assert delta_matrix(xi, y0).det() == pytest.approx(1.0, abs=1e-15)

    def test_single_site_amplitudes(self):
        # xi = 1 at the origin must give t = (4 - 2i)/5, r = (-1 - 2i)/5.
        t, r = amplitudes_from_matrix(delta_matrix(1.0, 0.0))
        assert t == pytest.approx((4 - 2j) / 5, abs=1e-14)
        assert r == pytest.approx((-1 - 2j) / 5, abs=1e-14)

    def test_matches_single_closed_form_on_grid(self):
        for xi in np.linspace(-4.0, 4.0, 17):
            for y0 in (-1.0, 0.0, 2.5):
                t_ref, r_ref = single(float(xi), y0)
                t, r = amplitudes_from_matrix(delta_matrix(float(xi), y0))
                assert t == pytest.approx(t_ref, abs=1e-13)
                assert r == pytest.approx(r_ref, abs=1e-13)


class TestTotalMatrix:
    def test_single_site_total_is_site_matrix(self):
        sys = DimensionlessSystem(xi=(2.0,), y=(0.5,))
        assert total_matrix(sys) == delta_matrix(2.0, 0.5)

    def test_product_determinant_stays_unit(self):
        # det is exactly 1 in exact arithmetic; in doubles the cancellation
        # in m11*m22 - m12*m21 leaves an absolute error that grows with the
        # square of the entry magnitudes (near-opaque stacks have huge
        # entries), so the bound must scale with that product.
        rng = np.random.default_rng(9)
        for _ in range(200):
            m = total_matrix(random_system(rng, max_sites=12))
            scale = max(1.0, abs(m.m11 * m.m22) + abs(m.m12 * m.m21))
            assert abs(m.det() - 1.0) <= 1e-12 * scale

    def test_moderate_product_determinant_within_absolute_bound(self):
        # Away from the near-opaque corner the absolute 1e-12 bound holds.
        rng = np.random.default_rng(10)
        for _ in range(200):
            n = int(rng.integers(1, 7))
            xi = tuple(rng.uniform(-2.0, 2.0, size=n))
            y = tuple(np.cumsum(np.concatenate([[0.0], rng.uniform(0.1, 3.0, size=n - 1)])))
            m = total_matrix(DimensionlessSystem(xi=xi, y=y))
            assert m.det() == pytest.approx(1.0, abs=1e-12)

    def test_composition_is_associative(self):
        a = delta_matrix(1.0, 0.0)
        b = delta_matrix(-2.0, 1.0)
        c = delta_matrix(0.5, 2.5)
        left = (c @ b) @ a
        right = c @ (b @ a)
        for field in ("m11", "m12", "m21", "m22"):
            assert getattr(left, field) == pytest.approx(getattr(right, field), abs=1e-13)

    def test_two_site_reference(self):
        sys = DimensionlessSystem(xi=(1.0, 1.0), y=(0.0, 1.0))
        t, r = amplitudes(sys)
        assert r == pytest.approx(-0.059736227127 - 0.690341414458j, abs=1e-11)
        assert t == pytest.approx(0.335810679642 - 0.638037226258j, abs=1e-11)

    def test_three_site_reference(self):
        sys = DimensionlessSystem(xi=(1.0, 2.0, 3.0), y=(0.0, 1.0, 3.0))
        t, r = amplitudes(sys)
        assert r == pytest.approx(0.143456498393 - 0.908479927808j, abs=1e-11)
        assert t == pytest.approx(-0.391735680065 + 0.025052161646j, abs=1e-11)


class TestAmplitudeExtraction:
    def test_identity_matrix_is_free_propagation(self):
        t, r = amplitudes_from_matrix(TransferMatrix(1.0, 0.0, 0.0, 1.0))
        assert t == 1.0
        assert r == 0.0

    def test_degenerate_matrix_raises(self):
        with pytest.raises(DegenerateMatrixError):
            amplitudes_from_matrix(TransferMatrix(1.0, 1.0, 1.0, 0.0))

    def test_agrees_with_direct_route(self):
        rng = np.random.default_rng(21)
        for _ in range(100):
            sys = random_system(rng)
            sol = solve_amplitudes(sys)
            t, r = amplitudes(sys)
            assert t == pytest.approx(sol.t, abs=1e-10)
            assert r == pytest.approx(sol.r, abs=1e-10)

    def test_merging_limit_reaches_single_site(self):
        # Two sites squeezed to a 1e-8 gap behave like one site carrying the
        # summed strength.
        rng = np.random.default_rng(33)
        for _ in range(50):
            xi1, xi2 = rng.uniform(-5.0, 5.0, size=2)
            sys = DimensionlessSystem(xi=(xi1, xi2), y=(0.0, 1e-8))
            t, r = amplitudes(sys)
            t_ref, r_ref = single(xi1 + xi2, 0.0)
            assert t == pytest.approx(t_ref, abs=1e-6)
            assert r == pytest.approx(r_ref, abs=1e-6)
