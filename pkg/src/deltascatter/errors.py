"""Exception types raised by the solver layers.

Everything derives from :class:`DeltaScatterError` so callers can catch the
whole family at once.  The subclasses also inherit the closest builtin
(ValueError or ArithmeticError) so generic handlers keep working.
"""

from __future__ import annotations

__all__ = [
    "DeltaScatterError",
    "DomainError",
    "OrderingError",
    "SingularSystemError",
    "DegenerateMatrixError",
    "ResonancePoleError",
    "ConfigError",
]


class DeltaScatterError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DeltaScatterError, ValueError):
    """An input value is outside the physically meaningful domain."""


class OrderingError(DeltaScatterError, ValueError):
    """Site positions are not strictly increasing or sit too close together."""


class SingularSystemError(DeltaScatterError, ArithmeticError):
    """The matching system has no usable pivot; the solve cannot proceed."""


class DegenerateMatrixError(DeltaScatterError, ArithmeticError):
    """A transfer matrix cannot be inverted for scattering amplitudes."""


class ResonancePoleError(DeltaScatterError, ValueError):
    """A closed-form resonance condition is evaluated at one of its poles."""


class ConfigError(DeltaScatterError, ValueError):
    """A run configuration (flags or JSON file) is malformed or inconsistent."""
