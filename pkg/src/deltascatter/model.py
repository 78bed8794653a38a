"""Problem description for a finite array of Dirac delta potentials.

A particle of mass m and energy E moves on the line through n delta spikes,

    V(x) = sum_i V0_i * delta(x - x_i),        x_1 < x_2 < ... < x_n.

Everything downstream works in dimensionless variables built from the
wavenumber k = sqrt(2 m E) / hbar:

    y    = k x          (position)
    xi_i = Vt_i / k     (site strength, with Vt_i = 2 m V0_i / hbar^2)

so the stationary equation reduces to  -psi'' + sum_i xi_i delta(y - y_i) psi
= psi  and the only free parameters are the xi_i and the site positions y_i.
This module holds the three value types for the physical, reduced, and
dimensionless descriptions plus the two conversions between them.  Pure value
transformations; nothing here solves anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, OrderingError

__all__ = [
    "MIN_GAP",
    "PhysicalInput",
    "PotentialArray",
    "DimensionlessSystem",
    "physical_to_reduced",
    "to_dimensionless",
]

#: Smallest allowed separation between neighbouring sites in y.  Below this
#: the interior region degenerates and the matching system loses rank.
MIN_GAP = 1e-12


def _as_floats(values, name: str) -> tuple[float, ...]:
    """Coerce a sequence to a tuple of finite floats or raise DomainError."""
    try:
        out = tuple(float(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a sequence of real numbers") from exc
    if not out:
        raise DomainError(f"{name} must contain at least one entry")
    for v in out:
        if not math.isfinite(v):
            raise DomainError(f"{name} entries must be finite, got {v!r}")
    return out


def _check_strictly_increasing(positions: tuple[float, ...], name: str, min_gap: float = 0.0) -> None:
    for left, right in zip(positions, positions[1:]):
        gap = right - left
        if gap <= 0.0:
            raise OrderingError(f"{name} must be strictly increasing, got {left} before {right}")
        if gap < min_gap:
            raise OrderingError(
                f"{name} separation {gap:g} is below the minimum {min_gap:g}"
            )


def _positive(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")
    return value


@dataclass(frozen=True)
class PhysicalInput:
    """Laboratory-frame description: mass, hbar, energy, strengths, positions.

    Energy must be positive (scattering states only); strengths may take
    either sign (barriers or wells) and may be zero.
    """

    mass: float
    hbar: float
    energy: float
    strengths: tuple[float, ...]
    positions: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mass", _positive(self.mass, "mass"))
        object.__setattr__(self, "hbar", _positive(self.hbar, "hbar"))
        object.__setattr__(self, "energy", _positive(self.energy, "energy"))
        object.__setattr__(self, "strengths", _as_floats(self.strengths, "strengths"))
        object.__setattr__(self, "positions", _as_floats(self.positions, "positions"))
        if len(self.strengths) != len(self.positions):
            raise DomainError(
                f"got {len(self.strengths)} strengths for {len(self.positions)} positions"
            )
        _check_strictly_increasing(self.positions, "positions")

    @property
    def n(self) -> int:
        return len(self.strengths)


@dataclass(frozen=True)
class PotentialArray:
    """Reduced description: strengths Vt_i = 2 m V0_i / hbar^2, positions x_i,
    and the wavenumber k = sqrt(2 m E) / hbar, all in units with hbar = 2m = 1.
    """

    reduced_strengths: tuple[float, ...]
    positions: tuple[float, ...]
    k: float

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "reduced_strengths", _as_floats(self.reduced_strengths, "reduced_strengths")
        )
        object.__setattr__(self, "positions", _as_floats(self.positions, "positions"))
        object.__setattr__(self, "k", _positive(self.k, "k"))
        if len(self.reduced_strengths) != len(self.positions):
            raise DomainError(
                f"got {len(self.reduced_strengths)} strengths for {len(self.positions)} positions"
            )
        _check_strictly_increasing(self.positions, "positions")

    @property
    def n(self) -> int:
        return len(self.reduced_strengths)


@dataclass(frozen=True)
class DimensionlessSystem:
    """Dimensionless scattering problem: strengths xi_i at positions y_i = k x_i.

    This is the canonical solver input.  Positions must be strictly increasing
    with neighbouring gaps of at least MIN_GAP; strengths may be any finite
    real values, zero included.
    """

    xi: tuple[float, ...]
    y: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "xi", _as_floats(self.xi, "xi"))
        object.__setattr__(self, "y", _as_floats(self.y, "y"))
        if len(self.xi) != len(self.y):
            raise DomainError(f"got {len(self.xi)} strengths for {len(self.y)} positions")
        _check_strictly_increasing(self.y, "y", min_gap=MIN_GAP)

    @classmethod
    def from_gaps(cls, xi, gaps, y0: float = 0.0) -> "DimensionlessSystem":
        """Build a system from strengths, the n-1 gaps between sites, and the
        position of the first site (default 0)."""
        xi = _as_floats(xi, "xi")
        y0 = float(y0)
        if not math.isfinite(y0):
            raise DomainError(f"y0 must be finite, got {y0!r}")
        gaps = tuple(float(g) for g in gaps)
        if len(gaps) != len(xi) - 1:
            raise DomainError(f"got {len(gaps)} gaps for {len(xi)} sites, expected {len(xi) - 1}")
        positions = [y0]
        for g in gaps:
            positions.append(positions[-1] + g)
        return cls(xi=xi, y=tuple(positions))

    @property
    def n(self) -> int:
        return len(self.xi)

    @property
    def gaps(self) -> tuple[float, ...]:
        return tuple(right - left for left, right in zip(self.y, self.y[1:]))


def physical_to_reduced(inp: PhysicalInput) -> PotentialArray:
    """Map the laboratory frame to the reduced one.

    Vt_i = 2 m V0_i / hbar^2   and   k = sqrt(2 m E) / hbar,
    so that k^2 = 2 m E / hbar^2 carries the energy.
    """
    scale = 2.0 * inp.mass / (inp.hbar * inp.hbar)
    k = math.sqrt(2.0 * inp.mass * inp.energy) / inp.hbar
    return PotentialArray(
        reduced_strengths=tuple(scale * v for v in inp.strengths),
        positions=inp.positions,
        k=k,
    )


def to_dimensionless(arr: PotentialArray) -> DimensionlessSystem:
    """Rescale the reduced description by the wavenumber: xi = Vt / k, y = k x.

    xi depends only on the ratio Vt / k, so multiplying all positions by c
    while dividing k by c leaves y unchanged, and dividing the strengths by c
    while multiplying k by c leaves xi unchanged.
    """
    return DimensionlessSystem(
        xi=tuple(v / arr.k for v in arr.reduced_strengths),
        y=tuple(arr.k * x for x in arr.positions),
    )
