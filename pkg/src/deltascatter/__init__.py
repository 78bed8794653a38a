"""Quantum scattering from finite arrays of Dirac delta potentials in 1D.

The package solves the stationary Schrodinger equation for a particle
hitting n delta spikes on a line, in the dimensionless form

    -psi'' + sum_i xi_i delta(y - y_i) psi = psi,

and exposes the reflection/transmission amplitudes, the piecewise
wavefunction, parameter sweeps, and transmission-resonance searches through
two independent numeric routes (a dense matching-system solve and transfer
matrices) plus hand-derived closed forms for small arrays.
"""

from __future__ import annotations

from .analysis import (
    ResonanceHit,
    SweepRecord,
    SweepSpec,
    find_resonances,
    residual_scan,
    sweep,
)
from .closed_forms import (
    double_equal,
    double_general,
    double_resonance_strength,
    single,
    six_equal,
    triple,
)
from .direct_solver import (
    AmplitudeSolution,
    LinearSystem,
    assemble_system,
    solve_amplitudes,
    solve_linear,
)
from .errors import (
    ConfigError,
    DegenerateMatrixError,
    DeltaScatterError,
    DomainError,
    OrderingError,
    ResonancePoleError,
    SingularSystemError,
)
from .model import (
    MIN_GAP,
    DimensionlessSystem,
    PhysicalInput,
    PotentialArray,
    physical_to_reduced,
    to_dimensionless,
)
from .transfer import (
    TransferMatrix,
    amplitudes,
    amplitudes_from_matrix,
    delta_matrix,
    total_matrix,
)
from .wavefunction import (
    MatchingReport,
    WaveSample,
    default_window,
    region_currents,
    sample,
    verify_matching,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # model
    "MIN_GAP",
    "PhysicalInput",
    "PotentialArray",
    "DimensionlessSystem",
    "physical_to_reduced",
    "to_dimensionless",
    # direct route
    "LinearSystem",
    "AmplitudeSolution",
    "assemble_system",
    "solve_linear",
    "solve_amplitudes",
    # transfer route
    "TransferMatrix",
    "delta_matrix",
    "total_matrix",
    "amplitudes_from_matrix",
    "amplitudes",
    # closed forms
    "single",
    "double_equal",
    "double_general",
    "triple",
    "six_equal",
    "double_resonance_strength",
    # wavefunction
    "WaveSample",
    "MatchingReport",
    "sample",
    "verify_matching",
    "region_currents",
    "default_window",
    # analysis
    "SweepSpec",
    "SweepRecord",
    "ResonanceHit",
    "sweep",
    "residual_scan",
    "find_resonances",
    # errors
    "DeltaScatterError",
    "DomainError",
    "OrderingError",
    "SingularSystemError",
    "DegenerateMatrixError",
    "ResonancePoleError",
    "ConfigError",
]
