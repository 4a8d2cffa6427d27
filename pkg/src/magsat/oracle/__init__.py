# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Shooting oracle for the even levels, independent of the spectrum equation.

Classes:
    ShootingConfig: Endpoint, tolerances and bracket of the solver.
    BaseShootingPotential: Template base for potentials in Rydberg units.
    LowestLandauPotential, SaturationPotential, CutoffCoulombPotential,
    FreePotential: Built-in potentials.

Functions:
    integrate_even: Endpoint value and node count for a trial ω.
    shoot_even_state: Even state with a given number of half-line nodes.
    shoot_ground: Nodeless ground state.
"""

from magsat.oracle.potentials import (
    BaseShootingPotential,
    CutoffCoulombPotential,
    FreePotential,
    LowestLandauPotential,
    SaturationPotential,
    default_omega_bracket,
)
from magsat.oracle.shooting import (
    DEFAULT_SHOOTING_CONFIG,
    ShootingConfig,
    as_potential,
    integrate_even,
    shoot_even_state,
    shoot_ground,
)

__all__ = [
    "DEFAULT_SHOOTING_CONFIG",
    "BaseShootingPotential",
    "CutoffCoulombPotential",
    "FreePotential",
    "LowestLandauPotential",
    "SaturationPotential",
    "ShootingConfig",
    "as_potential",
    "default_omega_bracket",
    "integrate_even",
    "shoot_even_state",
    "shoot_ground",
]
