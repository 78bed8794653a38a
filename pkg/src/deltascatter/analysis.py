"""Parameter sweeps and transmission-resonance searches.

A sweep walks one parameter of a family of arrays (the uniform gap, the
uniform strength, or the wavenumber of a fixed physical template) and
records T and R at each grid point via the transfer route, which is O(n) per
point.  The resonance finder scans the reflection probability |r|^2 on the
same kind of grid, locates its local minima, sharpens each bracket by
golden-section search, and keeps the minima that reach (numerically) zero
reflection.

Failed grid points are skipped and counted rather than aborting the whole
sweep; skips are reported through the module logger.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from . import transfer
from .errors import DeltaScatterError, DomainError
from .model import DimensionlessSystem

__all__ = [
    "PARAMS",
    "DEFAULT_STEPS",
    "SweepSpec",
    "SweepRecord",
    "ResonanceHit",
    "sweep",
    "residual_scan",
    "find_resonances",
]

log = logging.getLogger(__name__)

#: Parameters a sweep can walk.
PARAMS = ("dtilde", "xi", "k")

#: Grid density used when the caller does not choose one.  Resonances
#: narrower than one grid cell can still slip between points.
DEFAULT_STEPS = 2000

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SweepSpec:
    """One-parameter family of arrays plus the grid to walk.

    param selects what varies:

    - "dtilde": uniform gap; needs the fixed strengths xi (two or more
      sites) and sweeps over positive gaps only.
    - "xi": uniform strength applied to every site; needs the fixed gaps
      (possibly empty for a single site) and the site count from xi or gaps.
    - "k": wavenumber; needs the physical template vtilde (reduced
      strengths) and positions (in x), and rescales both xi_i = vtilde_i / k
      and y_i = k x_i at each grid point.

    lo/hi bound the grid, steps is the number of points (ends included).
    """

    param: str
    lo: float
    hi: float
    steps: int
    xi: tuple[float, ...] | None = None
    gaps: tuple[float, ...] | None = None
    y0: float = 0.0
    vtilde: tuple[float, ...] | None = None
    positions: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if self.param not in PARAMS:
            raise DomainError(f"param must be one of {PARAMS}, got {self.param!r}")
        lo = float(self.lo)
        hi = float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise DomainError(f"need finite lo < hi, got {lo!r} and {hi!r}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        steps = int(self.steps)
        if steps < 2:
            raise DomainError(f"steps must be at least 2, got {steps}")
        object.__setattr__(self, "steps", steps)
        for name in ("xi", "gaps", "vtilde", "positions"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, tuple(float(v) for v in value))
        object.__setattr__(self, "y0", float(self.y0))

        if self.param == "dtilde":
            if self.xi is None or len(self.xi) < 2:
                raise DomainError("a dtilde sweep needs fixed strengths for two or more sites")
            if lo <= 0.0:
                raise DomainError(f"gaps must stay positive, got lo = {lo!r}")
        elif self.param == "xi":
            if self.xi is None and self.gaps is None:
                raise DomainError("a xi sweep needs the site count via xi or gaps")
            if self.xi is not None and self.gaps is not None and len(self.gaps) != len(self.xi) - 1:
                raise DomainError(
                    f"got {len(self.gaps)} gaps for {len(self.xi)} sites"
                )
        else:
            if self.vtilde is None or self.positions is None:
                raise DomainError("a k sweep needs the physical template vtilde and positions")
            if len(self.vtilde) != len(self.positions):
                raise DomainError(
                    f"got {len(self.vtilde)} strengths for {len(self.positions)} positions"
                )
            if lo <= 0.0:
                raise DomainError(f"the wavenumber must stay positive, got lo = {lo!r}")

    @property
    def n(self) -> int:
        """Number of sites in every member of the family."""
        if self.param == "k":
            return len(self.vtilde)
        if self.xi is not None:
            return len(self.xi)
        return len(self.gaps) + 1

    def system_at(self, value: float) -> DimensionlessSystem:
        """Concrete array at one grid value of the swept parameter."""
        if self.param == "dtilde":
            return DimensionlessSystem.from_gaps(
                self.xi, (value,) * (len(self.xi) - 1), self.y0
            )
        if self.param == "xi":
            gaps = self.gaps if self.gaps is not None else (1.0,) * (self.n - 1)
            return DimensionlessSystem.from_gaps((value,) * self.n, gaps, self.y0)
        k = value
        return DimensionlessSystem(
            xi=tuple(v / k for v in self.vtilde),
            y=tuple(k * x for x in self.positions),
        )

    def grid(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.steps)


@dataclass(frozen=True)
class SweepRecord:
    """T and R at one value of the swept parameter."""

    param: float
    T: float
    R: float


@dataclass(frozen=True)
class ResonanceHit:
    """Location of a transmission resonance and the residual |r|^2 there."""

    param: float
    residual: float


def sweep(spec: SweepSpec) -> list[SweepRecord]:
    """Walk the grid and record T and R at every point that solves.

    Points where the system cannot be built or solved are logged, skipped,
    and counted; the returned list keeps grid order.
    """
    records: list[SweepRecord] = []
    skipped = 0
    for value in spec.grid():
        value = float(value)
        try:
            t, r = transfer.amplitudes(spec.system_at(value))
        except DeltaScatterError as exc:
            log.warning("skipping %s = %g: %s", spec.param, value, exc)
            skipped += 1
            continue
        records.append(SweepRecord(param=value, T=abs(t) ** 2, R=abs(r) ** 2))
    if skipped:
        log.warning("skipped %d of %d sweep points", skipped, spec.steps)
    return records


def residual_scan(spec: SweepSpec) -> tuple[np.ndarray, np.ndarray]:
    """|r|^2 over the sweep grid; unsolvable points hold NaN."""
    values = spec.grid()
    residuals = np.full(spec.steps, np.nan)
    for i, value in enumerate(values):
        try:
            _, r = transfer.amplitudes(spec.system_at(float(value)))
        except DeltaScatterError as exc:
            log.warning("skipping %s = %g: %s", spec.param, value, exc)
            continue
        residuals[i] = abs(r) ** 2
    return values, residuals


def _golden_minimize(f, a: float, b: float, width: float = 1e-12) -> float:
    """Golden-section search for the minimum of a unimodal f on [a, b]."""
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = f(c)
    fd = f(d)
    # Each pass shrinks the bracket by the golden ratio, so the iteration
    # count is bounded even for very wide starting brackets.
    for _ in range(400):
        if b - a <= width:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def find_resonances(spec: SweepSpec, tol: float = 1e-10) -> list[ResonanceHit]:
    """Locate parameter values of (numerically) perfect transmission.

    The grid scan brackets every local minimum of |r|^2 between its
    neighbours, golden-section search narrows each bracket to a width of
    1e-12, and a hit is kept when the refined minimum satisfies
    |r|^2 <= tol.  Hits closer together than 1e-9 are merged.  An empty
    result just means no resonance sits on the scanned range at this grid
    density.
    """
    if not (math.isfinite(tol) and tol > 0.0):
        raise DomainError(f"tol must be positive, got {tol!r}")
    values, residuals = residual_scan(spec)

    def objective(value: float) -> float:
        try:
            _, r = transfer.amplitudes(spec.system_at(value))
        except DeltaScatterError:
            return math.inf
        return abs(r) ** 2

    hits: list[ResonanceHit] = []
    for i in range(1, spec.steps - 1):
        trio = residuals[i - 1 : i + 2]
        if np.isnan(trio).any():
            continue
        if not (residuals[i] <= residuals[i - 1] and residuals[i] <= residuals[i + 1]):
            continue
        location = _golden_minimize(objective, float(values[i - 1]), float(values[i + 1]))
        residual = objective(location)
        if residual > tol:
            continue
        if hits and abs(location - hits[-1].param) <= 1e-9:
            if residual < hits[-1].residual:
                hits[-1] = ResonanceHit(param=location, residual=residual)
            continue
        hits.append(ResonanceHit(param=location, residual=residual))
    return hits
