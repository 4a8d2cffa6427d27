# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Value types for the magnetized-vacuum dielectric permittivities."""

from dataclasses import dataclass
from enum import Enum

from magsat.common.errors import DomainError

# Command-line spelling of the no-screening model
NO_SCREENING_ALIAS: str = "none"


class PermittivityModel(str, Enum):
    """Permittivity models understood by the registry."""

    FULL = "full"
    ASYMPTOTIC = "asymptotic"
    UNITY = "unity"

    @classmethod
    def from_name(cls, name: "str | PermittivityModel") -> "PermittivityModel":
        """Resolve a model name, accepting "none" as an alias of unity.

        Args:
            name: Model name or enum member.

        Returns:
            The matching PermittivityModel.

        Raises:
            DomainError: If the name is unknown.
        """
        if isinstance(name, PermittivityModel):
            return name
        if name == NO_SCREENING_ALIAS:
            return cls.UNITY
        try:
            return cls(name)
        except ValueError:
            known = ", ".join([m.value for m in cls] + [NO_SCREENING_ALIAS])
            raise DomainError(
                f"Unknown permittivity model '{name}'. Known models: {known}"
            ) from None


@dataclass(frozen=True)
class Permittivities:
    """Transverse and longitudinal permittivities of the magnetized vacuum.

    Attributes:
        eps_perp: ε⊥, response transverse to the field.
        eps_par: ε∥, response along the field.
        model: Model that produced the pair.
    """

    eps_perp: float
    eps_par: float
    model: PermittivityModel
