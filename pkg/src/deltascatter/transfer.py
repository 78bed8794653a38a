"""Transfer-matrix route to the scattering amplitudes.

Each site maps the plane-wave coefficients on its left to those on its right
through a 2x2 complex matrix.  Writing psi = A e^{iy} + B e^{-iy} on the left
of a site of strength xi at y0 and psi = C e^{iy} + D e^{-iy} on its right,
the matching conditions give

    (C)   (1 - i xi/2            -i xi/2 e^{-2i y0}) (A)
    (D) = (i xi/2 e^{2i y0}       1 + i xi/2       ) (B)

which has unit determinant for any real or complex xi.  Multiplying the site
matrices left to right (rightmost site applied last) gives the total matrix M
with (t, 0)^T = M (1, r)^T, hence

    r = -M21 / M22,    t = det(M) / M22 = 1 / M22.

This route costs O(n) and shares no code with the direct dense solve, so the
two can be used to cross-check each other.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import DegenerateMatrixError
from .model import DimensionlessSystem

__all__ = [
    "M22_FLOOR",
    "TransferMatrix",
    "delta_matrix",
    "total_matrix",
    "amplitudes_from_matrix",
    "amplitudes",
]

#: Below this magnitude of M22 the amplitude extraction divides by noise.
M22_FLOOR = 1e-14


@dataclass(frozen=True)
class TransferMatrix:
    """2x2 complex matrix acting on (forward, backward) coefficients."""

    m11: complex
    m12: complex
    m21: complex
    m22: complex

    def det(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        return TransferMatrix(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )


IDENTITY = TransferMatrix(1.0 + 0.0j, 0.0j, 0.0j, 1.0 + 0.0j)


def delta_matrix(xi: float | complex, y0: float) -> TransferMatrix:
    """Single-site matrix for strength xi at position y0.  det = 1 exactly."""
    half = 0.5j * xi
    return TransferMatrix(
        1.0 - half,
        -half * cmath.exp(-2j * y0),
        half * cmath.exp(2j * y0),
        1.0 + half,
    )


def total_matrix(system: DimensionlessSystem) -> TransferMatrix:
    """Ordered product over all sites, the rightmost site applied last."""
    total = IDENTITY
    for xi, y in zip(system.xi, system.y):
        total = delta_matrix(xi, y) @ total
    return total


def amplitudes_from_matrix(matrix: TransferMatrix) -> tuple[complex, complex]:
    """Extract (t, r) from a total matrix via (t, 0)^T = M (1, r)^T."""
    if abs(matrix.m22) <= M22_FLOOR:
        raise DegenerateMatrixError(
            f"|M22| = {abs(matrix.m22):.3e} is too small to extract amplitudes"
        )
    r = -matrix.m21 / matrix.m22
    t = matrix.det() / matrix.m22
    return t, r


def amplitudes(system: DimensionlessSystem) -> tuple[complex, complex]:
    """(t, r) for a dimensionless array via the transfer route."""
    return amplitudes_from_matrix(total_matrix(system))
