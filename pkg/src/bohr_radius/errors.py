"""Exception types raised by the Bohr radius routines."""

from __future__ import annotations


class BohrRadiusError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BohrRadiusError, ValueError):
    """An argument lies outside the domain where a formula is real and valid."""


class BracketSignError(BohrRadiusError):
    """Endpoint signs of a root bracket do not differ."""


class ConvergenceError(BohrRadiusError):
    """An iterative method hit its iteration cap."""


class CrossCheckError(BohrRadiusError):
    """Two independent methods disagree beyond the allowed tolerance."""

    def __init__(self, message: str, direct: float | None, spectral: float | None):
        super().__init__(message)
        self.direct = direct
        self.spectral = spectral
