# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Potentials fed to the shooting solver.

The shooting equation is written in Rydberg units with ξ = z/a_B:

    d²χ/dξ² = (ω² + U_Ry(ξ)) χ,    U_Ry = U_mc2 · 2/α².

Each potential subclasses BaseShootingPotential, which converts ξ to ζ = ξ/α,
evaluates the subclass's Mc² formula and converts the result to Rydberg
units.
"""

import logging
import math
from abc import ABC, abstractmethod

from magsat.common.errors import DomainError
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants
from magsat.potential.effective import effective_potential_lll, saturation_potential
from magsat.potential.units import mc2_to_rydberg, zeta_from_xi
from magsat.spectrum.kp import SpectrumRequest

logger = logging.getLogger(__name__)


class BaseShootingPotential(ABC):
    """Abstract base class for shooting potentials.

    Subclasses MUST implement:
        - get_potential_name(): Return a short identifier
        - potential_mc2(): Return U(ζ) in Mc² units

    Subclasses MAY override:
        - coulomb_charge: Effective Z/ε⊥ of the Coulomb tail (0 if none)

    Attributes:
        constants: Physical constants for the unit conversion.
    """

    def __init__(self, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> None:
        """Initialize the potential.

        Args:
            constants: Physical constants.
        """
        self.constants = constants

    def potential_ry(self, xi: float) -> float:
        """Potential at ξ = z/a_B in Rydberg units."""
        zeta = zeta_from_xi(abs(xi), self.constants)
        return mc2_to_rydberg(self.potential_mc2(zeta), self.constants)

    def depth_ry(self) -> float:
        """|U_Ry(0)|, the well depth; bounds the ground-state ω from above."""
        return abs(self.potential_ry(0.0))

    @property
    def coulomb_charge(self) -> float:
        """Effective charge of the Coulomb tail, Z/ε⊥."""
        return 0.0

    # ----- Abstract methods -----

    @abstractmethod
    def get_potential_name(self) -> str:
        """Return a short identifier of the potential."""

    @abstractmethod
    def potential_mc2(self, zeta: float) -> float:
        """Return U(ζ) in Mc² units for ζ ≥ 0."""


class LowestLandauPotential(BaseShootingPotential):
    """Closed-form lowest-Landau-level potential of a spectrum request."""

    def __init__(self, req: SpectrumRequest) -> None:
        """Initialize from a spectrum request.

        Args:
            req: Field, m, Z, model and constants of the potential.
        """
        super().__init__(req.constants)
        self.req = req

    def get_potential_name(self) -> str:
        """Return "lll"."""
        return "lll"

    @property
    def coulomb_charge(self) -> float:
        """Z/ε⊥."""
        return self.req.pole_unit

    def potential_mc2(self, zeta: float) -> float:
        """U₀^{|m|}(ζ)."""
        req = self.req
        return effective_potential_lll(
            req.m, zeta, req.field, req.eps, req.Z, req.constants
        )


class SaturationPotential(BaseShootingPotential):
    """The field-independent saturation curve."""

    def __init__(
        self, m: int = 0, Z: int = 1, constants: PhysicalConstants = DEFAULT_CONSTANTS
    ) -> None:
        """Initialize the potential.

        Args:
            m: Angular-momentum projection.
            Z: Nuclear charge.
            constants: Physical constants.
        """
        super().__init__(constants)
        self.m = m
        self.Z = Z

    def get_potential_name(self) -> str:
        """Return "saturation"."""
        return "saturation"

    @property
    def coulomb_charge(self) -> float:
        """Z."""
        return float(self.Z)

    def potential_mc2(self, zeta: float) -> float:
        """Saturation potential at ζ."""
        return saturation_potential(self.m, zeta, self.Z, self.constants)


class CutoffCoulombPotential(BaseShootingPotential):
    """Coulomb potential −2Z/(|ξ| + ξ_c) in Rydberg units.

    Its ground state deepens without bound as the cutoff ξ_c shrinks.
    """

    def __init__(
        self,
        Z: int = 1,
        cutoff_xi: float = 1e-3,
        constants: PhysicalConstants = DEFAULT_CONSTANTS,
    ) -> None:
        """Initialize the potential.

        Args:
            Z: Nuclear charge.
            cutoff_xi: Cutoff ξ_c > 0 in Bohr radii.
            constants: Physical constants.

        Raises:
            DomainError: If cutoff_xi ≤ 0.
        """
        if not cutoff_xi > 0:
            raise DomainError(f"cutoff_xi must be positive, got {cutoff_xi}")
        super().__init__(constants)
        self.Z = Z
        self.cutoff_xi = cutoff_xi

    def get_potential_name(self) -> str:
        """Return "cutoff-coulomb"."""
        return "cutoff-coulomb"

    @property
    def coulomb_charge(self) -> float:
        """Z."""
        return float(self.Z)

    def potential_ry(self, xi: float) -> float:
        """−2Z/(|ξ| + ξ_c), evaluated directly in Rydberg units."""
        return -2.0 * self.Z / (abs(xi) + self.cutoff_xi)

    def potential_mc2(self, zeta: float) -> float:
        """The same potential in Mc² units."""
        alpha = self.constants.alpha
        return -self.Z * alpha / (abs(zeta) + self.cutoff_xi / alpha)


class FreePotential(BaseShootingPotential):
    """U ≡ 0; even solutions are cosh(ωξ)."""

    def get_potential_name(self) -> str:
        """Return "free"."""
        return "free"

    def potential_ry(self, xi: float) -> float:
        """Zero."""
        return 0.0

    def potential_mc2(self, zeta: float) -> float:
        """Zero."""
        return 0.0


def default_omega_bracket(
    potential: BaseShootingPotential, nodes: int = 0
) -> tuple[float, float]:
    """Default ω bracket for the even state with ``nodes`` half-line nodes.

    The upper end √depth + 1 lies above every bound state; the lower end
    0.5/(nodes+1) lies below the state sought for a unit Coulomb tail.
    """
    hi = math.sqrt(potential.depth_ry()) + 1.0
    lo = 0.5 / (nodes + 1)
    logger.debug(
        f"Default bracket for {potential.get_potential_name()} (nodes={nodes}): "
        f"[{lo}, {hi:.6g}]"
    )
    return lo, hi
