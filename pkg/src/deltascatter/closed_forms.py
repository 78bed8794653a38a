"""Closed-form scattering amplitudes for small and structured arrays.

These expressions come from eliminating the interior coefficients of the
matching system by hand.  They are deliberately independent of both numeric
routes (direct dense solve, transfer matrices) so that each implementation
can serve as an oracle for the others.  All functions return the pair
(t, r); probabilities follow as T = |t|^2 and R = |r|^2.

Conventions: the first site sits at y0 (0 unless stated), gaps dt are in the
dimensionless position variable, and the incident wave has unit amplitude
from the left.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError, ResonancePoleError

__all__ = [
    "single",
    "double_equal",
    "double_general",
    "triple",
    "six_equal",
    "double_resonance_strength",
]


def _check_gap(dt: float, name: str = "dt") -> float:
    dt = float(dt)
    if not math.isfinite(dt) or dt <= 0.0:
        raise DomainError(f"{name} must be a positive finite gap, got {dt!r}")
    return dt


def single(xi: float, y0: float = 0.0) -> tuple[complex, complex]:
    """One site of strength xi at y0:

        t = 2i / (2i - xi),    r = xi e^{2i y0} / (2i - xi).

    A zero strength is transparent: t = 1, r = 0.  The reflection picks up
    the phase e^{2i y0} under translation while t does not move at all.
    """
    den = 2j - xi
    return 2j / den, xi * cmath.exp(2j * y0) / den


def double_equal(xi: float, dt: float) -> tuple[complex, complex]:
    """Two sites of equal strength xi separated by dt, the first at y = 0:

        t = 4 / (xi^2 (e^{2i dt} - 1) + 4 (i xi + 1))
        r = (xi^2 (1 - e^{2i dt}) - 2i xi (e^{2i dt} + 1)) / same denominator.
    """
    dt = _check_gap(dt)
    e = cmath.exp(2j * dt)
    den = xi * xi * (e - 1.0) + 4.0 * (1j * xi + 1.0)
    t = 4.0 / den
    r = (xi * xi * (1.0 - e) - 2j * xi * (e + 1.0)) / den
    return t, r


def double_general(xi1: float, xi2: float, dt: float) -> tuple[complex, complex]:
    """Two sites of independent strengths xi1 (at y = 0) and xi2 (at y = dt):

        t = 4 / (xi1 xi2 (e^{2i dt} - 1) + 2i (xi1 + xi2) + 4)
        r = (xi1 xi2 (1 - e^{2i dt}) - 2i (xi1 + xi2 e^{2i dt})) / same.

    Setting xi1 = xi2 recovers double_equal and setting either strength to
    zero recovers the single-site form at the surviving site's position.
    """
    dt = _check_gap(dt)
    e = cmath.exp(2j * dt)
    den = xi1 * xi2 * (e - 1.0) + 2j * (xi1 + xi2) + 4.0
    t = 4.0 / den
    r = (xi1 * xi2 * (1.0 - e) - 2j * (xi1 + xi2 * e)) / den
    return t, r


def triple(
    xi1: float, xi2: float, xi3: float, dt1: float, dt2: float
) -> tuple[complex, complex]:
    """Three sites at y = 0, dt1, dt1 + dt2 with strengths xi1, xi2, xi3:

        t = -8i / (gamma + omega),    r = (lambda + beta) / (gamma + omega)

    with, writing E1 = e^{2i dt1}, E2 = e^{2i dt2}, E12 = e^{2i (dt1+dt2)},

        gamma  = -xi1 xi2 xi3 (E12 - E1 - E2 + 1) + 2i xi1 xi2 (1 - E1)
        lambda = 2i xi2 xi3 (E12 - E1) - 4 (xi1 + xi2 E1 + xi3 E12)
        beta   = -xi1 xi2 xi3 (E1 + E2 - E12 - 1) + 2i xi1 xi2 (E1 - 1)
                 + 2i xi1 xi3 (E12 - 1)
        omega  = 2i xi1 xi3 (1 - E12) + 2i xi2 xi3 (1 - E2)
                 + 4 (xi1 + xi2 + xi3) - 8i.
    """
    dt1 = _check_gap(dt1, "dt1")
    dt2 = _check_gap(dt2, "dt2")
    e1 = cmath.exp(2j * dt1)
    e2 = cmath.exp(2j * dt2)
    e12 = cmath.exp(2j * (dt1 + dt2))
    gamma = -xi1 * xi2 * xi3 * (e12 - e1 - e2 + 1.0) + 2j * xi1 * xi2 * (1.0 - e1)
    lam = 2j * xi2 * xi3 * (e12 - e1) - 4.0 * (xi1 + xi2 * e1 + xi3 * e12)
    beta = (
        -xi1 * xi2 * xi3 * (e1 + e2 - e12 - 1.0)
        + 2j * xi1 * xi2 * (e1 - 1.0)
        + 2j * xi1 * xi3 * (e12 - 1.0)
    )
    omega = (
        2j * xi1 * xi3 * (1.0 - e12)
        + 2j * xi2 * xi3 * (1.0 - e2)
        + 4.0 * (xi1 + xi2 + xi3)
        - 8j
    )
    den = gamma + omega
    return -8j / den, (lam + beta) / den


def six_equal(xi: float, dt: float) -> tuple[complex, complex]:
    """Six equally spaced sites of equal strength xi, gap dt, first at y = 0:

        t = 64 / sum_{i=0..6} alpha_i xi^i
        r = sum_{i=1..6} beta_i xi^i / sum_{i=0..6} alpha_i xi^i

    where the alpha_i and beta_i are polynomials in E = e^{2i dt}.  The
    coefficient tables below are long enough that transcription slips are a
    real risk, so the test suite validates this function against the direct
    dense solve on a strength/gap grid before anything else trusts it.
    """
    dt = _check_gap(dt)
    e2 = cmath.exp(2j * dt)
    e4 = e2 * e2
    e6 = e4 * e2
    e8 = e6 * e2
    e10 = e8 * e2
    alpha = (
        64.0 + 0j,
        192j,
        80 * e2 + 64 * e4 + 48 * e6 + 32 * e8 + 16 * e10 - 240,
        160j * e2 + 64j * e4 - 32j * e8 - 32j * e10 - 160j,
        -120 * e2 + 24 * e4 + 48 * e6 + 12 * e8 - 24 * e10 + 60,
        -40j * e2 + 40j * e4 - 20j * e8 + 8j * e10 + 12j,
        5 * e2 - 10 * e4 + 10 * e6 - 5 * e8 + e10 - 1,
    )
    beta = (
        -32j * e2 - 32j * e4 - 32j * e6 - 32j * e8 - 32j * e10 - 32j,
        48 * e2 + 16 * e4 - 16 * e6 - 48 * e8 - 80 * e10 + 80,
        -16j * e2 - 64j * e4 - 64j * e6 - 16j * e8 + 80j * e10 + 80j,
        56 * e2 + 32 * e4 - 32 * e6 - 56 * e8 + 40 * e10 - 40,
        30j * e2 - 20j * e4 - 20j * e6 + 30j * e8 - 10j * e10 - 10j,
        -5 * e2 + 10 * e4 - 10 * e6 + 5 * e8 - e10 + 1,
    )
    den = sum(alpha[i] * xi**i for i in range(7))
    num = sum(beta[i - 1] * xi**i for i in range(1, 7))
    return 64.0 / den, num / den


def double_resonance_strength(dt: float) -> float:
    """Strength at which two equal sites with gap dt transmit perfectly:

        xi* = -2 / tan(dt),

    the root of the double_equal reflection numerator.  The condition has
    poles wherever tan(dt) = 0, i.e. at integer multiples of pi (a vanishing
    or half-wavelength-commensurate gap); those gaps are rejected.
    """
    dt = float(dt)
    if not math.isfinite(dt):
        raise DomainError(f"dt must be finite, got {dt!r}")
    nearest_pole = math.pi * round(dt / math.pi)
    if abs(dt - nearest_pole) < 1e-9:
        raise ResonancePoleError(
            f"gap {dt!r} is within 1e-9 of the pole at {nearest_pole!r}"
        )
    return -2.0 / math.tan(dt)
