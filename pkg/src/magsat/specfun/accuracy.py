# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Tolerance bundle used by the brute-force oracle forms."""

from dataclasses import dataclass

from magsat.common.errors import DomainError

# Default absolute tolerance for oracle quadratures
DEFAULT_ABS_TOL: float = 1e-12

# Default relative tolerance for oracle quadratures
DEFAULT_REL_TOL: float = 1e-10


@dataclass(frozen=True)
class FunctionAccuracy:
    """Absolute and relative tolerances requested from an oracle.

    Attributes:
        abs_tol: Absolute tolerance, strictly positive.
        rel_tol: Relative tolerance, strictly positive.

    Example:
        >>> FunctionAccuracy().rel_tol
        1e-10
        >>> FunctionAccuracy(abs_tol=0.0)
        Traceback (most recent call last):
        ...
        magsat.common.errors.DomainError: ...
    """

    abs_tol: float = DEFAULT_ABS_TOL
    rel_tol: float = DEFAULT_REL_TOL

    def __post_init__(self) -> None:
        """Reject non-positive tolerances."""
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError(
                f"Tolerances must be strictly positive, got abs_tol={self.abs_tol}, "
                f"rel_tol={self.rel_tol}"
            )
