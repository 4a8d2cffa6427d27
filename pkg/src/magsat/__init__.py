# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""magsat - Hydrogen-like atoms in strong magnetic fields with vacuum polarization.

This package computes the lowest-Landau-level effective potentials of a
hydrogen-like atom whose Coulomb field is screened by the Euler–Heisenberg
polarization of the magnetized vacuum, solves the resulting even-level
spectrum equation, and verifies it against direct shooting.

Subpackages:
    - Special functions: magsat.specfun
    - Field scales, constants and permittivities: magsat.fields
    - Landau states and effective potentials: magsat.potential
    - Applicability diagnostics: magsat.validity
    - Spectrum and saturation equations: magsat.spectrum
    - Shooting oracle: magsat.oracle
    - Command-line interface: magsat.cli

Example:
    >>> from magsat import SpectrumRequest, field_from, kp_solve, saturation_solve
    >>> deep = kp_solve(SpectrumRequest(field_from(1e9)))[0]
    >>> deep.omega < saturation_solve(0).omega
    True
"""

__version__ = "0.1.0"

# Public API - Import from subpackages
from magsat.common import (
    BracketError,
    ConfigError,
    ConvergenceError,
    DomainError,
    MagsatError,
    NoRootError,
    PoleError,
)
from magsat.fields import (
    FieldStrength,
    PermittivityModel,
    PhysicalConstants,
    field_from,
    permittivity,
    resolve_constants,
)
from magsat.oracle import ShootingConfig, shoot_ground
from magsat.potential import (
    effective_potential_lll,
    emit_curve,
    saturation_potential,
)
from magsat.spectrum import (
    SpectrumRequest,
    SpectrumRoot,
    kp_solve,
    saturation_solve,
)
from magsat.validity import validity_report

__all__ = [
    # Errors
    "MagsatError",
    "DomainError",
    "PoleError",
    "ConvergenceError",
    "NoRootError",
    "BracketError",
    "ConfigError",
    # Fields
    "FieldStrength",
    "PermittivityModel",
    "PhysicalConstants",
    "field_from",
    "permittivity",
    "resolve_constants",
    # Potentials
    "effective_potential_lll",
    "emit_curve",
    "saturation_potential",
    # Spectrum and oracle
    "SpectrumRequest",
    "SpectrumRoot",
    "kp_solve",
    "saturation_solve",
    "ShootingConfig",
    "shoot_ground",
    # Diagnostics
    "validity_report",
]
