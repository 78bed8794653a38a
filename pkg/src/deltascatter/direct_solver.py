"""Scattering amplitudes from the full matching system, solved directly.

With a unit wave incident from the left, the wavefunction in region j
(between sites j-1 and j) is

    psi_j(y) = a_j e^{iy} + b_j e^{-iy},

with a_1 = 1, b_1 = r, a_{n+1} = t, b_{n+1} = 0.  At every site y_j two
conditions hold:

    psi_j(y_j) = psi_{j+1}(y_j)                       (continuity)
    psi'_{j+1}(y_j) - psi'_j(y_j) = xi_j psi(y_j)     (derivative jump)

Collecting them gives a dense 2n x 2n complex linear system in the unknowns
(r, a_2, b_2, ..., a_n, b_n, t); the constants contributed by the incident
wave e^{iy} are moved to the right-hand side.  The jump rows evaluate psi at
the site from the region to its right (the two choices are equivalent by
continuity).  This route scales as O(n^3) and exists alongside the O(n)
transfer-matrix route so each can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, SingularSystemError
from .model import DimensionlessSystem

__all__ = [
    "PIVOT_RTOL",
    "LinearSystem",
    "AmplitudeSolution",
    "assemble_system",
    "solve_linear",
    "solve_amplitudes",
]

#: A pivot below this fraction of the largest matrix entry counts as zero.
PIVOT_RTOL = 1e-14


@dataclass
class LinearSystem:
    """Dense complex system A x = b in the unknown order (r, a_2, b_2, ..., a_n, b_n, t)."""

    matrix: np.ndarray
    rhs: np.ndarray


@dataclass(frozen=True)
class AmplitudeSolution:
    """Reflection and transmission amplitudes plus the interior coefficients.

    interior holds the (a_j, b_j) pairs for regions j = 2 .. n; it is empty
    for a single site.  For real strengths, T + R = 1 to within rounding.
    """

    r: complex
    t: complex
    interior: tuple[tuple[complex, complex], ...] = field(default=())

    @property
    def T(self) -> float:
        """Transmission probability |t|^2."""
        return abs(self.t) ** 2

    @property
    def R(self) -> float:
        """Reflection probability |r|^2."""
        return abs(self.r) ** 2

    def region_coefficients(self) -> tuple[tuple[complex, complex], ...]:
        """(a_j, b_j) for every region j = 1 .. n+1, leftmost first."""
        return ((1.0 + 0.0j, self.r), *self.interior, (self.t, 0.0j))


def _region_slots(n: int) -> list[tuple[tuple[int | None, complex], tuple[int | None, complex]]]:
    """Unknown-vector slot for each region's (a, b) coefficient.

    A slot is (index, fixed_value); index None marks a coefficient pinned by
    the scattering boundary conditions (a_1 = 1, b_{n+1} = 0).
    """
    slots: list[tuple[tuple[int | None, complex], tuple[int | None, complex]]] = [
        ((None, 1.0 + 0.0j), (0, 0.0j))
    ]
    for j in range(2, n + 1):
        slots.append(((2 * j - 3, 0.0j), (2 * j - 2, 0.0j)))
    slots.append(((2 * n - 1, 0.0j), (None, 0.0j)))
    return slots


def assemble_system(system: DimensionlessSystem) -> LinearSystem:
    """Build the 2n x 2n matching system for a dimensionless array.

    Row 2j-2 (0-based) encodes continuity at site j, row 2j-1 the derivative
    jump; both are written left to right in increasing site order.
    """
    n = system.n
    size = 2 * n
    matrix = np.zeros((size, size), dtype=complex)
    rhs = np.zeros(size, dtype=complex)
    slots = _region_slots(n)

    def add(row: int, slot: tuple[int | None, complex], coeff: complex) -> None:
        index, fixed = slot
        if index is None:
            rhs[row] -= fixed * coeff
        else:
            matrix[row, index] += coeff

    for j, (xi, y) in enumerate(zip(system.xi, system.y), start=1):
        (a_left, b_left) = slots[j - 1]
        (a_right, b_right) = slots[j]
        up = np.exp(1j * y)
        down = np.exp(-1j * y)
        row = 2 * (j - 1)
        # psi_j(y_j) - psi_{j+1}(y_j) = 0
        add(row, a_left, up)
        add(row, b_left, down)
        add(row, a_right, -up)
        add(row, b_right, -down)
        # psi'_{j+1}(y_j) - psi'_j(y_j) - xi_j psi_{j+1}(y_j) = 0
        row += 1
        add(row, a_right, (1j - xi) * up)
        add(row, b_right, (-1j - xi) * down)
        add(row, a_left, -1j * up)
        add(row, b_left, 1j * down)

    return LinearSystem(matrix=matrix, rhs=rhs)


def solve_linear(system: LinearSystem) -> np.ndarray:
    """Solve A x = b by Gaussian elimination with partial pivoting.

    Pivots are chosen by complex magnitude.  If the best available pivot is
    smaller than PIVOT_RTOL times the largest entry of A, the system is
    reported as singular rather than divided through by noise.
    """
    a = np.array(system.matrix, dtype=complex, copy=True)
    b = np.array(system.rhs, dtype=complex, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    if b.shape != (n,):
        raise DomainError(f"rhs length {b.shape} does not match matrix size {n}")

    floor = PIVOT_RTOL * max(1.0, float(np.abs(a).max()))
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[pivot_row, col]) < floor:
            raise SingularSystemError(
                f"no usable pivot in column {col}: |{a[pivot_row, col]:.3e}| < {floor:.3e}"
            )
        if pivot_row != col:
            a[[col, pivot_row]] = a[[pivot_row, col]]
            b[[col, pivot_row]] = b[[pivot_row, col]]
        below = slice(col + 1, n)
        factors = a[below, col] / a[col, col]
        a[below, col:] -= np.outer(factors, a[col, col:])
        b[below] -= factors * b[col]

    x = np.zeros(n, dtype=complex)
    for row in range(n - 1, -1, -1):
        x[row] = (b[row] - a[row, row + 1 :] @ x[row + 1 :]) / a[row, row]
    return x


def solve_amplitudes(system: DimensionlessSystem) -> AmplitudeSolution:
    """Assemble and solve the matching system for a dimensionless array."""
    linear = assemble_system(system)
    x = solve_linear(linear)
    n = system.n
    interior = tuple((complex(x[2 * j - 3]), complex(x[2 * j - 2])) for j in range(2, n + 1))
    return AmplitudeSolution(r=complex(x[0]), t=complex(x[2 * n - 1]), interior=interior)
