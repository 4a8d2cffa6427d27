# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Built-in permittivity models and the permittivity() entry point.

full:
    One-loop Euler–Heisenberg permittivities of a constant magnetic field,
    with q = 1/2b:

    ε⊥ = 1 − (α/2π){(2/3)ln 2b − 1/3 − 1/(2b²)
         + (1/b)[ln(π/b) − 2 ln Γ(q)] + 8ζ′(−1, q)}
    ε∥ = 1 − (α/3π)[b + ln 2b + ψ(q)]

asymptotic:
    Large-field limit ε⊥ = 1, ε∥ = 1 + αb/3π.

unity:
    No vacuum polarization, ε⊥ = ε∥ = 1.
"""

import math

from magsat.common.errors import DomainError
from magsat.fields.base_model import BasePermittivityModel
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants
from magsat.fields.field_strength import FieldStrength
from magsat.fields.permittivity import Permittivities, PermittivityModel
from magsat.fields.registry import create_model
from magsat.fields.registry import register_permittivity_model as register
from magsat.specfun import digamma, hurwitz_zeta_sderiv_m1, ln_gamma

# Smallest b for which the full model is evaluated (keeps 1/2b in the kernel domains)
FULL_MODEL_MIN_B: float = 1e-3


@register(PermittivityModel.FULL.value)
class FullPermittivityModel(BasePermittivityModel):
    """Euler–Heisenberg permittivities via log-gamma, digamma and ζ′(−1, q)."""

    def get_model_name(self) -> str:
        """Return "full"."""
        return PermittivityModel.FULL.value

    def validate_field(self, field: FieldStrength) -> None:
        """Require b > FULL_MODEL_MIN_B.

        Args:
            field: The magnetic field.

        Raises:
            DomainError: If b is too small for the full formulas.
        """
        if not field.b > FULL_MODEL_MIN_B:
            raise DomainError(
                f"Full permittivity model needs b > {FULL_MODEL_MIN_B}, got b={field.b}"
            )

    def compute(self, field: FieldStrength) -> tuple[float, float]:
        """Evaluate the full one-loop formulas term by term."""
        b = field.b
        alpha = self.constants.alpha
        q = 1.0 / (2.0 * b)
        ln_2b = math.log(2.0 * b)

        perp_bracket = (
            2.0 / 3.0 * ln_2b
            - 1.0 / 3.0
            - 1.0 / (2.0 * b * b)
            + (math.log(math.pi / b) - 2.0 * ln_gamma(q)) / b
            + 8.0 * hurwitz_zeta_sderiv_m1(q)
        )
        eps_perp = 1.0 - alpha / (2.0 * math.pi) * perp_bracket
        eps_par = 1.0 - alpha / (3.0 * math.pi) * (b + ln_2b + digamma(q))
        return eps_perp, eps_par


@register(PermittivityModel.ASYMPTOTIC.value)
class AsymptoticPermittivityModel(BasePermittivityModel):
    """Large-field asymptote: ε⊥ = 1, ε∥ = 1 + αb/3π."""

    def get_model_name(self) -> str:
        """Return "asymptotic"."""
        return PermittivityModel.ASYMPTOTIC.value

    def compute(self, field: FieldStrength) -> tuple[float, float]:
        """Evaluate the asymptotic formulas."""
        return 1.0, 1.0 + self.constants.alpha * field.b / (3.0 * math.pi)


@register(PermittivityModel.UNITY.value)
class UnityPermittivityModel(BasePermittivityModel):
    """No vacuum polarization: ε⊥ = ε∥ = 1."""

    def get_model_name(self) -> str:
        """Return "unity"."""
        return PermittivityModel.UNITY.value

    def compute(self, field: FieldStrength) -> tuple[float, float]:
        """Return (1, 1)."""
        return 1.0, 1.0


def permittivity(
    field: FieldStrength,
    model: PermittivityModel | str = PermittivityModel.FULL,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> Permittivities:
    """Evaluate (ε⊥, ε∥) for a field under a named model.

    Args:
        field: The magnetic field.
        model: Model name or enum member; "none" is accepted for unity.
        constants: Physical constants.

    Returns:
        The permittivities tagged with the model.

    Raises:
        DomainError: If the model is unknown or rejects the field; kernel
            domain errors propagate unchanged.

    Example:
        >>> from magsat.fields import field_from
        >>> eps = permittivity(field_from(1e8, "calB"), "full")
        >>> round(eps.eps_par, 2), round(eps.eps_perp, 3)
        (5.12, 0.995)
    """
    name = PermittivityModel.from_name(model).value
    return create_model(name, constants).evaluate(field)
