# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Physical constants used throughout magsat.

All computations are carried out in units of the electron Compton length
λ_C = ħ/Mc and the electron rest energy Mc². The only inputs that change
results are the fine-structure constant, the Schwinger critical field and
the electron rest energy; everything else is derived from them.
"""

import dataclasses
from dataclasses import dataclass

from magsat.common.errors import DomainError

# CODATA 2018 fine-structure constant
CODATA_ALPHA: float = 7.2973525693e-3

# Schwinger critical field M²c³/eħ in gauss
DEFAULT_B_CR_GAUSS: float = 4.41381e13

# Electron rest energy Mc² in eV (CODATA 2018)
ELECTRON_REST_ENERGY_EV: float = 510998.95

# Euler-Mascheroni constant
EULER_GAMMA: float = 0.5772156649015329

# Admissible open interval for alpha overrides
ALPHA_BOUNDS: tuple[float, float] = (0.005, 0.01)


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable set of physical constants.

    Attributes:
        alpha: Fine-structure constant, in ALPHA_BOUNDS.
        b_cr_gauss: Schwinger critical field B_cr in gauss.
        electron_rest_energy_ev: Electron rest energy Mc² in eV.
        euler_gamma: Euler-Mascheroni constant γ.

    Example:
        >>> constants = PhysicalConstants()
        >>> round(constants.rydberg_ev, 4)
        13.6057
        >>> PhysicalConstants(alpha=1 / 137.0).alpha > constants.alpha
        True
    """

    alpha: float = CODATA_ALPHA
    b_cr_gauss: float = DEFAULT_B_CR_GAUSS
    electron_rest_energy_ev: float = ELECTRON_REST_ENERGY_EV
    euler_gamma: float = EULER_GAMMA

    def __post_init__(self) -> None:
        """Validate the constants."""
        low, high = ALPHA_BOUNDS
        if not low < self.alpha < high:
            raise DomainError(
                f"alpha must lie in ({low}, {high}), got {self.alpha}"
            )
        if not self.b_cr_gauss > 0:
            raise DomainError(f"b_cr_gauss must be positive, got {self.b_cr_gauss}")
        if not self.electron_rest_energy_ev > 0:
            raise DomainError(
                f"electron_rest_energy_ev must be positive, "
                f"got {self.electron_rest_energy_ev}"
            )

    @property
    def rydberg_ev(self) -> float:
        """Rydberg energy α²Mc²/2 in eV."""
        return self.alpha**2 * self.electron_rest_energy_ev / 2.0

    @property
    def b_a_gauss(self) -> float:
        """Atomic reference field B_a = α²B_cr in gauss."""
        return self.alpha**2 * self.b_cr_gauss

    def with_overrides(self, **changes: float) -> "PhysicalConstants":
        """Return a copy with some constants replaced.

        Args:
            **changes: Field names and their new values.

        Returns:
            A new, validated PhysicalConstants.
        """
        return dataclasses.replace(self, **changes)

    def as_dict(self) -> dict[str, float]:
        """Return primary and derived constants as a flat dictionary."""
        values = dataclasses.asdict(self)
        values["rydberg_ev"] = self.rydberg_ev
        values["b_a_gauss"] = self.b_a_gauss
        return values


DEFAULT_CONSTANTS = PhysicalConstants()
