# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Applicability diagnostics for the shallow-well spectrum approximation.

Three quantities decide whether the approximation chain behind the spectrum
solver holds:

- The shallow-well coefficient Ξ = |U₀^{|m|}(ζ)|·K², which must stay small
  over the support ℓ = K·λ_C of the short-range part of the potential.
- The Coulomb ratio R = U₀^{|m|}(ζ)/U_C(ζ), which must be close to one
  beyond ℓ so that the long-range part is Coulombian.
- The adiabatic parameter ε∥a_H²/(ε⊥z²), which must be small for the
  transverse motion to decouple.

The thresholds turning these numbers into a verdict are an
operationalization of "much smaller than one" and are configurable.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from magsat.common.errors import DomainError, PoleError
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants
from magsat.fields.field_strength import FieldStrength
from magsat.fields.models import permittivity
from magsat.fields.permittivity import Permittivities, PermittivityModel
from magsat.potential.effective import effective_potential_lll
from magsat.specfun import tricomi_u

logger = logging.getLogger(__name__)

# Points per ζ-interval when extracting min/max of Ξ (endpoints included)
SWEEP_POINTS: int = 256

# Smallest sampling distance for the Coulomb ratio and adiabatic parameter, in λ_C
MIN_SAMPLE_ZETA: float = 1.5


class Verdict(str, Enum):
    """Outcome of the validity check."""

    OK = "ok"
    MARGINAL = "marginal"
    VIOLATED = "violated"


@dataclass(frozen=True)
class ValidityThresholds:
    """Thresholds turning diagnostics into a verdict.

    Attributes:
        shallow: Ξ_max below this (with a Coulombian tail) is ok.
        coulombian: Coulomb ratio above this (with a shallow well) is ok.
        shallow_violated: Ξ_max at or above this is violated.
        coulombian_violated: Coulomb ratio at or below this is violated.
    """

    shallow: float = 0.1
    coulombian: float = 0.9
    shallow_violated: float = 1.0
    coulombian_violated: float = 0.8

    def __post_init__(self) -> None:
        """Check the thresholds are ordered."""
        if not 0 < self.shallow <= self.shallow_violated:
            raise DomainError(
                f"Need 0 < shallow <= shallow_violated, got {self.shallow}, "
                f"{self.shallow_violated}"
            )
        if not 0 < self.coulombian_violated <= self.coulombian <= 1:
            raise DomainError(
                f"Need 0 < coulombian_violated <= coulombian <= 1, got "
                f"{self.coulombian_violated}, {self.coulombian}"
            )

    def classify(self, xi_max: float, ratio: float) -> Verdict:
        """Map Ξ_max and the Coulomb ratio to a verdict."""
        if xi_max >= self.shallow_violated or ratio <= self.coulombian_violated:
            return Verdict.VIOLATED
        if xi_max < self.shallow and ratio > self.coulombian:
            return Verdict.OK
        return Verdict.MARGINAL


DEFAULT_THRESHOLDS = ValidityThresholds()


class ValidityReport(BaseModel):
    """Diagnostics for one (field, m, K, model) combination."""

    model_config = ConfigDict(frozen=True)

    cal_b: float = Field(..., description="Field in units of B_a")
    m: int = Field(..., description="Angular-momentum projection")
    Z: int = Field(..., description="Nuclear charge")
    model: str = Field(..., description="Permittivity model")
    K: float = Field(..., ge=0, description="Support multiplier, l = K * lambda_C")
    xi_min: float = Field(..., ge=0, description="Smallest Xi over [0, K]")
    xi_max: float = Field(..., ge=0, description="Largest Xi over [0, K]")
    sample_zeta: float = Field(..., gt=0, description="Sampling distance in lambda_C")
    ratio_at_probe: float = Field(
        ..., ge=0, description="Coulomb ratio at the sampling distance"
    )
    adiabatic_param: float = Field(..., ge=0, description="Adiabatic parameter")
    landau_ratio: float | None = Field(
        default=None, ge=0, description="|E_bind| over the Landau energy"
    )
    verdict: Verdict


def _check_positive_zeta(zeta: float, name: str) -> None:
    if zeta == 0.0:
        raise PoleError(f"{name} is undefined at zeta = 0")
    if zeta < 0:
        raise DomainError(f"{name} requires zeta > 0, got {zeta}")


def shallow_well_xi(
    field: FieldStrength,
    m: int,
    Z: int,
    eps: Permittivities,
    zeta: float,
    K: float,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Shallow-well coefficient Ξ^{|m|}(𝓑, ζ) = |U₀^{|m|}(ζ)| K².

    Args:
        field: The magnetic field.
        m: Angular-momentum projection.
        Z: Nuclear charge.
        eps: Vacuum permittivities.
        zeta: Longitudinal distance z/λ_C, ≥ 0.
        K: Support multiplier, > 0.
        constants: Physical constants.

    Returns:
        Ξ, non-negative.

    Raises:
        DomainError: If K ≤ 0 or zeta < 0.
    """
    if not K > 0:
        raise DomainError(f"Support multiplier K must be positive, got {K}")
    if zeta < 0:
        raise DomainError(f"shallow_well_xi requires zeta >= 0, got {zeta}")
    return abs(effective_potential_lll(m, zeta, field, eps, Z, constants)) * K * K


def coulomb_ratio(
    field: FieldStrength, m: int, zeta: float, eps: Permittivities
) -> float:
    """Ratio of the effective potential to its Coulomb asymptote, 𝓧Ψ(𝓧²).

    Args:
        field: The magnetic field.
        m: Angular-momentum projection.
        zeta: Longitudinal distance z/λ_C, > 0.
        eps: Vacuum permittivities.

    Returns:
        R in (0, 1).

    Raises:
        PoleError: At zeta = 0.
        DomainError: For negative zeta.
    """
    _check_positive_zeta(zeta, "coulomb_ratio")
    x_sq = eps.eps_perp / eps.eps_par * 0.5 * field.b * zeta * zeta
    return math.sqrt(x_sq) * tricomi_u(0.5, 0.5 - abs(m), x_sq)


def adiabatic_parameter(
    field: FieldStrength, eps: Permittivities, zeta: float
) -> float:
    """Adiabatic small parameter ε∥a_H²/(ε⊥ζ²) with a_H² = 1/b.

    Raises:
        PoleError: At zeta = 0.
        DomainError: For negative zeta.
    """
    _check_positive_zeta(zeta, "adiabatic_parameter")
    return eps.eps_par / (field.b * eps.eps_perp * zeta * zeta)


def binding_to_landau_ratio(
    omega: float,
    field: FieldStrength,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Binding energy α²ω²/2 over the Landau energy b, both in Mc² units."""
    return constants.alpha**2 * omega * omega / 2.0 / field.b


def xi_range(
    field: FieldStrength,
    m: int,
    Z: int,
    eps: Permittivities,
    K: float,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    points: int = SWEEP_POINTS,
) -> tuple[float, float]:
    """Return (min, max) of Ξ over ζ ∈ [0, K] on an inclusive grid."""
    grid = np.linspace(0.0, K, points)
    values = np.array(
        [shallow_well_xi(field, m, Z, eps, float(z), K, constants) for z in grid]
    )
    return float(values.min()), float(values.max())


def validity_report(
    field: FieldStrength,
    m: int = 0,
    Z: int = 1,
    K: float = 1.5,
    model: PermittivityModel | str = PermittivityModel.FULL,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    thresholds: ValidityThresholds = DEFAULT_THRESHOLDS,
    omega: float | None = None,
) -> ValidityReport:
    """Aggregate the diagnostics into a report with a verdict.

    Ξ is swept over ζ ∈ [0, K]. The Coulomb ratio and the adiabatic
    parameter are evaluated at the sampling distance max(K, MIN_SAMPLE_ZETA).

    Args:
        field: The magnetic field.
        m: Angular-momentum projection.
        Z: Nuclear charge.
        K: Support multiplier, ≥ 0; K = 0 gives Ξ = 0.
        model: Permittivity model.
        constants: Physical constants.
        thresholds: Verdict thresholds.
        omega: Optional KP root; adds the binding-to-Landau ratio.

    Returns:
        The report.

    Raises:
        DomainError: If K < 0.

    Example:
        >>> from magsat.fields import field_from
        >>> validity_report(field_from(1e5), m=0, K=1.5).verdict.value
        'ok'
    """
    if K < 0:
        raise DomainError(f"Support multiplier K must be non-negative, got {K}")
    model_name = PermittivityModel.from_name(model)
    eps = permittivity(field, model_name, constants)

    if K == 0:
        xi_min = xi_max = 0.0
    else:
        xi_min, xi_max = xi_range(field, m, Z, eps, K, constants)

    sample_zeta = max(K, MIN_SAMPLE_ZETA)
    ratio = coulomb_ratio(field, m, sample_zeta, eps)
    adiabatic = adiabatic_parameter(field, eps, sample_zeta)
    landau = (
        binding_to_landau_ratio(omega, field, constants) if omega is not None else None
    )
    verdict = thresholds.classify(xi_max, ratio)
    logger.debug(
        f"Validity at calB={field.cal_b:.3g}, |m|={abs(m)}, K={K}: "
        f"xi=[{xi_min:.4g}, {xi_max:.4g}], R={ratio:.4g}, verdict={verdict.value}"
    )
    return ValidityReport(
        cal_b=field.cal_b,
        m=m,
        Z=Z,
        model=model_name.value,
        K=K,
        xi_min=xi_min,
        xi_max=xi_max,
        sample_zeta=sample_zeta,
        ratio_at_probe=ratio,
        adiabatic_param=adiabatic,
        landau_ratio=landau,
        verdict=verdict,
    )
