"""Piecewise reconstruction of the scattering wavefunction.

Once the amplitudes are known, the wavefunction in region j (between sites
j-1 and j) is psi_j(y) = a_j e^{iy} + b_j e^{-iy} with the coefficient table
(1, r), (a_2, b_2), ..., (t, 0).  This module evaluates psi, its derivative,
and the probability density |psi|^2 on a grid, and checks the matching
conditions after the fact.

A sample point y belongs to region j when y_{j-1} < y <= y_j, so a point
exactly on a site reports the left region's coefficients; psi is continuous
there but psi' is not, and the left-sided limit is the one returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .direct_solver import AmplitudeSolution
from .errors import DomainError
from .model import DimensionlessSystem

__all__ = [
    "WaveSample",
    "MatchingReport",
    "sample",
    "verify_matching",
    "region_currents",
    "default_window",
]


@dataclass(frozen=True)
class WaveSample:
    """Wavefunction data at one position: psi, dpsi/dy, and |psi|^2."""

    y: float
    psi: complex
    dpsi: complex
    density: float


@dataclass(frozen=True)
class MatchingReport:
    """Per-site residuals of the two matching conditions.

    continuity_residuals[j] is |psi(y_j + h) - psi(y_j - h)|, evaluated from
    the neighbouring regions, and decays like O(h) for a valid solution.
    jump_residuals[j] is the analytic defect
    |psi'_{j+1}(y_j) - psi'_j(y_j) - xi_j psi(y_j)| and is limited only by
    the accuracy of the solve.
    """

    continuity_residuals: tuple[float, ...]
    jump_residuals: tuple[float, ...]

    @property
    def max_continuity(self) -> float:
        return max(self.continuity_residuals)

    @property
    def max_jump(self) -> float:
        return max(self.jump_residuals)


def _evaluate(coeffs: tuple[complex, complex], y: float) -> tuple[complex, complex]:
    a, b = coeffs
    up = np.exp(1j * y)
    down = np.exp(-1j * y)
    psi = a * up + b * down
    dpsi = 1j * a * up - 1j * b * down
    return complex(psi), complex(dpsi)


def default_window(system: DimensionlessSystem, margin: float = 3.0) -> tuple[float, float]:
    """Plot window extending margin units past the outermost sites."""
    return system.y[0] - margin, system.y[-1] + margin


def sample(
    system: DimensionlessSystem,
    solution: AmplitudeSolution,
    ymin: float,
    ymax: float,
    count: int,
) -> list[WaveSample]:
    """Evaluate the wavefunction on count evenly spaced points of [ymin, ymax].

    Both endpoints are included.  In the leftmost region the density carries
    the incident/reflected interference 1 + |r|^2 + 2 Re(r e^{-2iy}); in the
    rightmost region it is the constant |t|^2.
    """
    ymin = float(ymin)
    ymax = float(ymax)
    if not (np.isfinite(ymin) and np.isfinite(ymax) and ymin < ymax):
        raise DomainError(f"need finite ymin < ymax, got {ymin!r} and {ymax!r}")
    count = int(count)
    if count < 2:
        raise DomainError(f"count must be at least 2, got {count}")

    coeffs = solution.region_coefficients()
    if len(coeffs) != system.n + 1:
        raise DomainError(
            f"solution has {len(coeffs)} regions but the system has {system.n} sites"
        )
    sites = np.asarray(system.y)
    ys = np.linspace(ymin, ymax, count)
    # Count sites strictly left of y: a point on a site lands in the left region.
    regions = np.searchsorted(sites, ys, side="left")

    out: list[WaveSample] = []
    for y, region in zip(ys, regions):
        psi, dpsi = _evaluate(coeffs[region], float(y))
        out.append(WaveSample(y=float(y), psi=psi, dpsi=dpsi, density=abs(psi) ** 2))
    return out


def verify_matching(
    system: DimensionlessSystem,
    solution: AmplitudeSolution,
    h: float = 1e-6,
) -> MatchingReport:
    """Check continuity and the derivative jump at every site.

    The continuity residual compares the left region at y_j - h with the
    right region at y_j + h; the jump residual is evaluated analytically at
    y_j itself, with psi taken from the right region.
    """
    if not (np.isfinite(h) and h > 0.0):
        raise DomainError(f"h must be a small positive step, got {h!r}")
    coeffs = solution.region_coefficients()
    continuity = []
    jump = []
    for j, (xi, y) in enumerate(zip(system.xi, system.y)):
        left_psi, left_dpsi = _evaluate(coeffs[j], y - h)
        right_psi, right_dpsi = _evaluate(coeffs[j + 1], y + h)
        continuity.append(abs(right_psi - left_psi))
        psi_at, dpsi_right = _evaluate(coeffs[j + 1], y)
        _, dpsi_left = _evaluate(coeffs[j], y)
        jump.append(abs(dpsi_right - dpsi_left - xi * psi_at))
    return MatchingReport(
        continuity_residuals=tuple(continuity),
        jump_residuals=tuple(jump),
    )


def region_currents(solution: AmplitudeSolution) -> tuple[float, ...]:
    """Probability current Im(psi* psi') in each region.

    For psi = a e^{iy} + b e^{-iy} the current is |a|^2 - |b|^2, independent
    of y; particle conservation makes it identical across all regions, equal
    to 1 - |r|^2 on the left and |t|^2 on the right.
    """
    return tuple(abs(a) ** 2 - abs(b) ** 2 for a, b in solution.region_coefficients())
