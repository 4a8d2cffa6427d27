# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Exception hierarchy shared by every magsat module.

All library errors derive from MagsatError. Domain problems additionally
derive from ValueError and numerical failures from RuntimeError, so callers
that only know the builtin exception types keep working.

Classes:
    MagsatError: Base class for all magsat errors.
    DomainError: An argument lies outside a function's domain.
    PoleError: An argument sits on a pole or singularity.
    ConvergenceError: A series, quadrature or ODE integration did not converge.
    NoRootError: A root bracket holds no sign change.
    BracketError: A shooting bracket shows a constant node-count signature.
    ConfigError: A configuration source is malformed.
"""


class MagsatError(Exception):
    """Base class for all magsat errors."""


class DomainError(MagsatError, ValueError):
    """Raised when an argument is outside the domain of an operation."""


class PoleError(DomainError):
    """Raised when an argument sits on a pole or a singular point."""


class ConvergenceError(MagsatError, RuntimeError):
    """Raised when a numerical procedure fails to reach its tolerance.

    Attributes:
        achieved_error: The best error estimate reached before giving up,
            or None when the procedure could not provide one.
    """

    def __init__(self, message: str, achieved_error: float | None = None) -> None:
        """Initialize the error.

        Args:
            message: Human-readable description of the failure.
            achieved_error: Error estimate reached before giving up.
        """
        super().__init__(message)
        self.achieved_error = achieved_error


class NoRootError(ConvergenceError):
    """Raised when a bracket holds no sign change after all retries."""


class BracketError(ConvergenceError):
    """Raised when the shooting node count does not change across a bracket."""


class ConfigError(MagsatError, ValueError):
    """Raised when a configuration file or environment value is malformed."""
