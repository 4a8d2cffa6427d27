# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Anisotropic Coulomb potential and the effective longitudinal potentials.

Distances are in units of λ_C and energies in units of Mc². The screened
nucleus produces the anisotropic Coulomb potential

    U(ζ∥, ζ⊥) = −Zα / (√ε⊥ √(ε⊥ζ∥² + ε∥ζ⊥²)).

Averaging it over a pair of Landau radial functions gives the effective
potential of the longitudinal motion. For the lowest Landau level this
average has the closed form

    U₀^{|m|}(ζ) = −Zα √(b/(2ε⊥ε∥)) Ψ(1/2, 1/2 − |m|; 𝓧²),
    𝓧² = (ε⊥/ε∥)(b/2)ζ²,

which is regular at ζ = 0 where Ψ is replaced by Γ(|m|+1/2)/Γ(|m|+1).
"""

import logging
import math
import warnings

from scipy import integrate

from magsat.common.errors import ConvergenceError, DomainError, PoleError
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants
from magsat.fields.field_strength import FieldStrength
from magsat.fields.permittivity import Permittivities
from magsat.potential.landau import radial_density
from magsat.potential.units import magnetic_length
from magsat.specfun import ln_gamma, tricomi_u

logger = logging.getLogger(__name__)

# Relative tolerance requested from quad for matrix elements
ELEMENT_QUAD_REL_TOL: float = 1e-11

# Matrix elements whose error estimate exceeds this relative level are rejected
ELEMENT_ACCEPT_REL: float = 1e-9

# Absolute floor for the acceptance test (off-diagonal elements can vanish)
ELEMENT_ACCEPT_ABS: float = 1e-13

# Tail cutoff in t = ρ²/2a_H²: base value plus growth per polynomial degree
TAIL_T_BASE: float = 40.0
TAIL_T_PER_DEGREE: float = 4.0


def _check_charge(Z: int) -> None:
    if Z < 1:
        raise DomainError(f"Nuclear charge Z must be a positive integer, got {Z}")


def lll_origin_factor(m: int) -> float:
    """Return Γ(|m|+1/2)/Γ(|m|+1), the ζ = 0 limit of Ψ(1/2, 1/2−|m|; 𝓧²)."""
    abs_m = abs(m)
    return math.exp(ln_gamma(abs_m + 0.5) - ln_gamma(abs_m + 1.0))


def anisotropic_coulomb(
    x_par: float,
    x_perp: float,
    Z: int,
    eps: Permittivities,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Potential energy of the electron in the screened nuclear field.

    Args:
        x_par: Distance along the field, in λ_C.
        x_perp: Distance across the field, in λ_C.
        Z: Nuclear charge.
        eps: Vacuum permittivities.
        constants: Physical constants.

    Returns:
        The energy in Mc² units (negative).

    Raises:
        PoleError: At the origin.
        DomainError: If Z < 1.

    Example:
        >>> from magsat.fields import Permittivities, PermittivityModel
        >>> unit = Permittivities(1.0, 1.0, PermittivityModel.UNITY)
        >>> anisotropic_coulomb(1.0, 0.0, 1, unit) == -DEFAULT_CONSTANTS.alpha
        True
    """
    _check_charge(Z)
    if x_par == 0.0 and x_perp == 0.0:
        raise PoleError("anisotropic_coulomb is singular at the origin")
    radius = math.sqrt(eps.eps_perp * x_par * x_par + eps.eps_par * x_perp * x_perp)
    return -Z * constants.alpha / (math.sqrt(eps.eps_perp) * radius)


def on_orbit_potential(
    zeta: float,
    field: FieldStrength,
    eps: Permittivities,
    Z: int = 1,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Anisotropic Coulomb potential on the lowest Landau orbit ζ⊥ = b^{-1/2}."""
    return anisotropic_coulomb(zeta, magnetic_length(field), Z, eps, constants)


def effective_potential_element(
    n_rho: int,
    n_rho2: int,
    m: int,
    zeta: float,
    field: FieldStrength,
    eps: Permittivities,
    Z: int = 1,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Matrix element of the Coulomb potential between two Landau states.

    The transverse integral is taken in u = ρ/(√2 a_H), which makes the
    integrand smooth at the axis, with a breakpoint where ε⊥ζ² and the
    transverse term balance and a cutoff where the Gaussian tail is
    negligible.

    Args:
        n_rho: Radial quantum number of the bra state.
        n_rho2: Radial quantum number of the ket state.
        m: Angular-momentum projection shared by both states.
        zeta: Longitudinal distance z/λ_C.
        field: The magnetic field.
        eps: Vacuum permittivities.
        Z: Nuclear charge.
        constants: Physical constants.

    Returns:
        The element in Mc² units.

    Raises:
        DomainError: If a radial quantum number is negative or Z < 1.
        ConvergenceError: If the quadrature misses ELEMENT_ACCEPT_REL.
    """
    _check_charge(Z)
    if n_rho < 0 or n_rho2 < 0:
        raise DomainError(
            f"Radial quantum numbers must be non-negative, got {n_rho}, {n_rho2}"
        )
    b = field.b
    eps_perp, eps_par = eps.eps_perp, eps.eps_par
    zeta_sq = zeta * zeta
    transverse = 2.0 * eps_par / b

    def integrand(u: float) -> float:
        t = u * u
        weight = radial_density(n_rho, n_rho2, m, t)
        if u == 0.0:
            return 2.0 * weight / math.sqrt(transverse) if zeta_sq == 0.0 else 0.0
        return 2.0 * weight / math.sqrt(eps_perp * zeta_sq / t + transverse)

    degree = n_rho + n_rho2 + abs(m)
    u_max = math.sqrt(TAIL_T_BASE + TAIL_T_PER_DEGREE * degree)
    balance = abs(zeta) * math.sqrt(eps_perp * b / (2.0 * eps_par))
    points = [balance] if 0.0 < balance < u_max else None

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        integral, error = integrate.quad(
            integrand,
            0.0,
            u_max,
            points=points,
            epsabs=ELEMENT_ACCEPT_ABS,
            epsrel=ELEMENT_QUAD_REL_TOL,
            limit=200,
        )

    # Roundoff warnings on cancelling off-diagonal integrands are judged by the bound
    for w in caught:
        if issubclass(w.category, integrate.IntegrationWarning):
            logger.debug(f"quad warning for element ({n_rho}, {n_rho2}): {w.message}")
    if error > ELEMENT_ACCEPT_REL * abs(integral) + ELEMENT_ACCEPT_ABS:
        raise ConvergenceError(
            f"Effective potential element ({n_rho}, {n_rho2}, |m|={abs(m)}) at "
            f"zeta={zeta} did not converge: error {error:.3e} for {integral:.6e}",
            achieved_error=error,
        )

    return -Z * constants.alpha / math.sqrt(eps_perp) * integral


def effective_potential_lll(
    m: int,
    zeta: float,
    field: FieldStrength,
    eps: Permittivities,
    Z: int = 1,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Lowest-Landau-level effective potential in closed form.

    Args:
        m: Angular-momentum projection; only |m| enters.
        zeta: Longitudinal distance z/λ_C; only ζ² enters.
        field: The magnetic field.
        eps: Vacuum permittivities.
        Z: Nuclear charge.
        constants: Physical constants.

    Returns:
        U₀^{|m|}(ζ) in Mc² units.

    Raises:
        DomainError: If Z < 1.

    Example:
        >>> from magsat.fields import field_from, permittivity
        >>> field = field_from(1e8)
        >>> round(effective_potential_lll(0, 0.0, field, permittivity(field)), 4)
        -0.2958
    """
    _check_charge(Z)
    eps_perp, eps_par = eps.eps_perp, eps.eps_par
    amplitude = Z * constants.alpha * math.sqrt(field.b / (2.0 * eps_perp * eps_par))
    if zeta == 0.0:
        return -amplitude * lll_origin_factor(m)
    x_sq = eps_perp / eps_par * 0.5 * field.b * zeta * zeta
    return -amplitude * tricomi_u(0.5, 0.5 - abs(m), x_sq)


def saturation_potential(
    m: int,
    zeta: float,
    Z: int = 1,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Field-independent limit of the effective potential as b → ∞.

    Substituting ε⊥ = 1, ε∥ = αb/3π into the closed form removes the field:

        U_sat(ζ) = −Z √(3πα/2) Ψ(1/2, 1/2 − |m|; (3π/2α)ζ²).

    Args:
        m: Angular-momentum projection; only |m| enters.
        zeta: Longitudinal distance z/λ_C.
        Z: Nuclear charge.
        constants: Physical constants.

    Returns:
        The saturated potential in Mc² units (attractive).

    Raises:
        DomainError: If Z < 1.
    """
    _check_charge(Z)
    alpha = constants.alpha
    amplitude = Z * math.sqrt(1.5 * math.pi * alpha)
    if zeta == 0.0:
        return -amplitude * lll_origin_factor(m)
    x_sq = 1.5 * math.pi / alpha * zeta * zeta
    return -amplitude * tricomi_u(0.5, 0.5 - abs(m), x_sq)


def coulomb_asymptote(
    zeta: float,
    eps: Permittivities,
    Z: int = 1,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """Large-distance Coulomb form −Zα/(ε⊥|ζ|).

    Raises:
        PoleError: At ζ = 0.
        DomainError: If Z < 1.
    """
    _check_charge(Z)
    if zeta == 0.0:
        raise PoleError("coulomb_asymptote is singular at zeta = 0")
    return -Z * constants.alpha / (eps.eps_perp * abs(zeta))
