# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Landau states: quantum numbers, radial functions and transverse energies.

Radial functions are returned in units where the magnetic length a_H = 1:

    R(ρ) = sqrt((n_ρ+|m|)!/(2^|m| n_ρ!)) e^{-ρ²/4} ρ^|m| / |m|!
           · M(−n_ρ, |m|+1, ρ²/2)

so that ∫ R² ρ dρ = 1 over the half line.
"""

import math
from dataclasses import dataclass
from enum import IntEnum

from magsat.common.errors import DomainError
from magsat.fields.field_strength import FieldStrength
from magsat.specfun import kummer_m, ln_gamma


class Spin(IntEnum):
    """Spin projection σ along the field."""

    DOWN = -1
    UP = 1


@dataclass(frozen=True)
class QuantumNumbers:
    """Quantum numbers of a state in a strong magnetic field.

    Attributes:
        n_rho: Radial Landau quantum number, ≥ 0.
        m: Angular-momentum projection.
        sigma: Spin projection, −1 or +1.
        nu: Longitudinal label, ≥ 0.
    """

    n_rho: int
    m: int
    sigma: Spin = Spin.DOWN
    nu: int = 0

    def __post_init__(self) -> None:
        """Validate the quantum numbers."""
        if self.n_rho < 0:
            raise DomainError(f"n_rho must be non-negative, got {self.n_rho}")
        if self.nu < 0:
            raise DomainError(f"nu must be non-negative, got {self.nu}")
        try:
            object.__setattr__(self, "sigma", Spin(self.sigma))
        except ValueError:
            raise DomainError(f"sigma must be -1 or +1, got {self.sigma}") from None

    @classmethod
    def lowest_landau_level(cls, m: int, nu: int = 0) -> "QuantumNumbers":
        """Build the lowest-Landau-level state with projection −|m|."""
        return cls(n_rho=0, m=-abs(m), sigma=Spin.DOWN, nu=nu)

    @property
    def is_lowest_landau_level(self) -> bool:
        """True for n_ρ = 0, m ≤ 0 and σ = −1."""
        return self.n_rho == 0 and self.m <= 0 and self.sigma is Spin.DOWN


def landau_energy(qn: QuantumNumbers, field: FieldStrength) -> float:
    """Transverse Landau energy b[n_ρ + (|m| + m + 1 + σ)/2] in Mc² units.

    Args:
        qn: The state's quantum numbers.
        field: The magnetic field.

    Returns:
        The energy; exactly zero for lowest-Landau-level states.
    """
    excitation = qn.n_rho + (abs(qn.m) + qn.m + 1 + int(qn.sigma)) // 2
    return field.b * excitation


def _ln_radial_norm(n_rho: int, abs_m: int) -> float:
    """Log of sqrt((n+|m|)!/(2^|m| n!)) / |m|!."""
    return (
        0.5 * (ln_gamma(n_rho + abs_m + 1) - ln_gamma(n_rho + 1))
        - 0.5 * abs_m * math.log(2.0)
        - ln_gamma(abs_m + 1)
    )


def radial_function(n_rho: int, m: int, rho_over_ah: float) -> float:
    """Evaluate the Landau radial function R_{n_ρ m}.

    Args:
        n_rho: Radial quantum number, ≥ 0.
        m: Angular-momentum projection; only |m| enters.
        rho_over_ah: Transverse distance in units of a_H, ≥ 0.

    Returns:
        R in units of 1/a_H.

    Raises:
        DomainError: If n_rho < 0 or rho_over_ah < 0.

    Example:
        >>> radial_function(0, 0, 0.0)
        1.0
    """
    if n_rho < 0:
        raise DomainError(f"n_rho must be non-negative, got {n_rho}")
    if rho_over_ah < 0:
        raise DomainError(f"rho must be non-negative, got {rho_over_ah}")
    abs_m = abs(m)
    t = 0.5 * rho_over_ah * rho_over_ah
    polynomial = kummer_m(-float(n_rho), float(abs_m + 1), t)
    if rho_over_ah == 0.0:
        return math.exp(_ln_radial_norm(n_rho, abs_m)) if abs_m == 0 else 0.0
    log_magnitude = (
        _ln_radial_norm(n_rho, abs_m) - 0.5 * t + abs_m * math.log(rho_over_ah)
    )
    return math.exp(log_magnitude) * polynomial


def radial_density(n_rho: int, n_rho2: int, m: int, t: float) -> float:
    """Return R_{n_ρ m} R_{n_ρ' m} as a density in t = ρ²/2a_H².

    With ρ dρ = a_H² dt this is the integrand weight of transverse matrix
    elements; on the diagonal of the lowest level it is t^|m| e^{-t}/|m|!.

    Args:
        n_rho: First radial quantum number.
        n_rho2: Second radial quantum number.
        m: Angular-momentum projection; only |m| enters.
        t: ρ²/2a_H², ≥ 0.

    Returns:
        The product density.
    """
    abs_m = abs(m)
    polynomials = kummer_m(-float(n_rho), float(abs_m + 1), t) * kummer_m(
        -float(n_rho2), float(abs_m + 1), t
    )
    ln_prefactor = (
        0.5 * (ln_gamma(n_rho + abs_m + 1) - ln_gamma(n_rho + 1))
        + 0.5 * (ln_gamma(n_rho2 + abs_m + 1) - ln_gamma(n_rho2 + 1))
        - 2.0 * ln_gamma(abs_m + 1)
    )
    if t == 0.0:
        return math.exp(ln_prefactor) * polynomials if abs_m == 0 else 0.0
    return math.exp(ln_prefactor - t + abs_m * math.log(t)) * polynomials
