# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Logarithmic derivatives matched by the spectrum equation.

All three formulas take ξ = z/a_B. The short-distance form comes from the
shallow well of the effective potential, the long-distance form from the
small-argument expansion of the Whittaker function, and the interpolating
form uses ε∥ ≈ 1 + α³𝓑/3π directly. Equating the first two at any ξ
reproduces the spectrum equation, so ξ drops out at a root.
"""

import math

from magsat.common.errors import DomainError, PoleError
from magsat.fields.constants import DEFAULT_CONSTANTS, EULER_GAMMA, PhysicalConstants
from magsat.fields.field_strength import FieldStrength
from magsat.spectrum.kp import SpectrumRequest
from magsat.specfun import digamma


def _check_xi(xi: float) -> None:
    if not xi > 0:
        raise DomainError(f"xi must be positive, got {xi}")


def log_derivative_short(xi: float, req: SpectrumRequest) -> float:
    """Short-distance logarithmic derivative −(Z/ε⊥)[ln 4𝓧² − ψ(|m|+1)].

    Here 4𝓧² = 2𝓑ξ²ε⊥/ε∥ is the shallow-well argument at ξ.

    Args:
        xi: Distance z/a_B, > 0.
        req: The spectrum request providing field, m, Z and permittivities.

    Returns:
        The logarithmic derivative.

    Raises:
        DomainError: If xi ≤ 0.
    """
    _check_xi(xi)
    eps = req.eps
    four_x_sq = 2.0 * req.field.cal_b * xi * xi * eps.eps_perp / eps.eps_par
    return -(req.Z / eps.eps_perp) * (math.log(four_x_sq) - digamma(req.abs_m + 1.0))


def log_derivative_long(xi: float, omega: float, kappa: float) -> float:
    """Long-distance log derivative −ω − 2ωκ[ln 2ωξ + ψ(1−κ) + 2γ].

    Args:
        xi: Distance z/a_B, > 0.
        omega: Binding parameter, > 0.
        kappa: Coulomb parameter Z/(ε⊥ω).

    Returns:
        The logarithmic derivative.

    Raises:
        DomainError: If xi or omega is not positive.
        PoleError: If 1 − κ is a non-positive integer.

    Example:
        >>> log_derivative_long(0.1, 2.0, 0.0)
        -2.0
    """
    _check_xi(xi)
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega}")
    if kappa == 0.0:
        return -omega
    try:
        psi = digamma(1.0 - kappa)
    except PoleError as err:
        raise PoleError(
            f"log_derivative_long has a pole at kappa={kappa}"
        ) from err
    return -omega - 2.0 * omega * kappa * (
        math.log(2.0 * omega * xi) + psi + 2.0 * EULER_GAMMA
    )


def log_derivative_mv(
    xi: float,
    field: FieldStrength,
    m: int,
    Z: int = 1,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Interpolating form −Z[ln(2𝓑ξ²/(1 + α³𝓑/3π)) − ψ(|m|+1)].

    Args:
        xi: Distance z/a_B, > 0.
        field: The magnetic field.
        m: Angular-momentum projection.
        Z: Nuclear charge.
        constants: Physical constants.

    Returns:
        The logarithmic derivative.

    Raises:
        DomainError: If xi ≤ 0.
    """
    _check_xi(xi)
    cal_b = field.cal_b
    screening = 1.0 + constants.alpha**3 * cal_b / (3.0 * math.pi)
    return -Z * (
        math.log(2.0 * cal_b * xi * xi / screening) - digamma(abs(m) + 1.0)
    )
