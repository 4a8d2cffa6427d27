# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Base class for permittivity models.

Provides the Template Method pattern for permittivity evaluation. Concrete
models implement the formula for (ε⊥, ε∥); the base class validates the
field, checks the result and tags it with the model.
"""

import logging
from abc import ABC, abstractmethod

from magsat.common.errors import DomainError
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants
from magsat.fields.field_strength import FieldStrength
from magsat.fields.permittivity import Permittivities, PermittivityModel

logger = logging.getLogger(__name__)


class BasePermittivityModel(ABC):
    """Abstract base class for permittivity models.

    Subclasses MUST implement:
        - get_model_name(): Return the registry name (e.g., "full")
        - compute(): Return (eps_perp, eps_par) for a field

    Subclasses MAY override:
        - validate_field(): Reject fields outside the model's domain

    Attributes:
        constants: Physical constants used by the formulas.

    Example:
        >>> class HalfModel(BasePermittivityModel):
        ...     def get_model_name(self) -> str:
        ...         return "unity"
        ...
        ...     def compute(self, field: FieldStrength) -> tuple[float, float]:
        ...         return 0.5, 0.5
        >>>
        >>> from magsat.fields.field_strength import field_from
        >>> HalfModel().evaluate(field_from(1e5)).eps_par
        0.5
    """

    def __init__(self, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> None:
        """Initialize the model.

        Args:
            constants: Physical constants; defaults to CODATA values.
        """
        self.constants = constants

    def evaluate(self, field: FieldStrength) -> Permittivities:
        """Evaluate the permittivities for a field.

        This is the main entry point. It validates the field, delegates the
        formula to compute() and checks that both permittivities are
        positive.

        Args:
            field: The magnetic field.

        Returns:
            Permittivities tagged with this model.

        Raises:
            DomainError: If the field is rejected or the result is not positive.
        """
        self.validate_field(field)
        eps_perp, eps_par = self.compute(field)
        if not (eps_perp > 0 and eps_par > 0):
            raise DomainError(
                f"{self.get_model_name()} model produced non-positive "
                f"permittivities eps_perp={eps_perp}, eps_par={eps_par} at b={field.b}"
            )
        logger.debug(
            f"{self.get_model_name()} permittivities at b={field.b:.6g}: "
            f"eps_perp={eps_perp:.12g}, eps_par={eps_par:.12g}"
        )
        return Permittivities(
            eps_perp=eps_perp,
            eps_par=eps_par,
            model=PermittivityModel(self.get_model_name()),
        )

    # ----- Abstract methods -----

    @abstractmethod
    def get_model_name(self) -> str:
        """Return the registry name of the model."""

    @abstractmethod
    def compute(self, field: FieldStrength) -> tuple[float, float]:
        """Return (eps_perp, eps_par) for the field.

        Args:
            field: The magnetic field, already validated.
        """

    # ----- Optional hooks -----

    def validate_field(self, field: FieldStrength) -> None:
        """Reject fields outside the model's domain.

        Args:
            field: The magnetic field.

        Raises:
            DomainError: If field.b is not positive.
        """
        if not field.b > 0:
            raise DomainError(f"Permittivities need b > 0, got b={field.b}")
