# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Length and energy scales.

Lengths are held in units of the Compton length λ_C and energies in units of
Mc². The magnetic length a_H = λ_C b^{-1/2} and the Bohr radius a_B = λ_C/α
are the other two scales in play; the Rydberg-normalized coordinate is
ξ = z/a_B = αζ.
"""

import math
from enum import Enum

from magsat.common.errors import DomainError
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants
from magsat.fields.field_strength import FieldStrength


class EnergyUnit(str, Enum):
    """Unit of an energy value."""

    MC2 = "mc2"
    RYDBERG = "rydberg"

    @classmethod
    def from_name(cls, name: "str | EnergyUnit") -> "EnergyUnit":
        """Resolve a unit name; "ry" is accepted for rydberg.

        Args:
            name: Unit name or enum member.

        Returns:
            The matching EnergyUnit.

        Raises:
            DomainError: If the name is unknown.
        """
        if isinstance(name, EnergyUnit):
            return name
        if name == "ry":
            return cls.RYDBERG
        try:
            return cls(name)
        except ValueError:
            raise DomainError(
                f"Unknown energy unit '{name}'. Known units: mc2, ry, rydberg"
            ) from None


def magnetic_length(field: FieldStrength) -> float:
    """Return a_H in units of λ_C."""
    return 1.0 / math.sqrt(field.b)


def bohr_radius(constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Return a_B in units of λ_C."""
    return 1.0 / constants.alpha


def xi_from_zeta(
    zeta: float, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Convert ζ = z/λ_C to ξ = z/a_B."""
    return constants.alpha * zeta


def zeta_from_xi(xi: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Convert ξ = z/a_B to ζ = z/λ_C."""
    return xi / constants.alpha


def mc2_to_rydberg(
    value: float, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Convert an energy from Mc² units to Rydberg units (Ry = α²Mc²/2)."""
    return value * 2.0 / constants.alpha**2


def rydberg_to_mc2(
    value: float, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Convert an energy from Rydberg units to Mc² units."""
    return value * constants.alpha**2 / 2.0


def convert_energy(
    value: float,
    unit: EnergyUnit,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Express an Mc² energy in the requested unit."""
    if unit is EnergyUnit.RYDBERG:
        return mc2_to_rydberg(value, constants)
    return value
