# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Common infrastructure shared across magsat subpackages.

Classes:
    MagsatError: Base class for all magsat errors.
    DomainError: Argument outside an operation's domain.
    PoleError: Argument on a pole or singular point.
    ConvergenceError: Numerical procedure failed to converge.
    NoRootError: Root bracket without a sign change.
    BracketError: Shooting bracket with a constant node count.
    ConfigError: Malformed configuration input.
"""

from magsat.common.errors import (
    BracketError,
    ConfigError,
    ConvergenceError,
    DomainError,
    MagsatError,
    NoRootError,
    PoleError,
)

__all__ = [
    "MagsatError",
    "DomainError",
    "PoleError",
    "ConvergenceError",
    "NoRootError",
    "BracketError",
    "ConfigError",
]
