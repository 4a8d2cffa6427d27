# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Even-parity spectrum of the lowest Landau level with screening.

Matching the short-distance logarithmic derivative of the effective
potential to the small-argument Whittaker solution of the Coulomb tail
gives the spectrum equation

    ln 𝓑 = ε⊥ω/Z + 2 ln ω + 2ψ(1 − Z/(ε⊥ω)) + 4γ + ln 2
           + ψ(|m|+1) + ln(ε∥/ε⊥)

for the binding parameter ω = √(−E/Ry). Its right-hand side increases
monotonically between consecutive digamma poles ω = Z/(ε⊥n), so every
inter-pole interval holds exactly one root and the interval beyond the last
pole holds the deepest one (ν = 0).

With ε⊥ = 1 and ε∥ = 1 + α³𝓑/3π the equation becomes field-limited and
its 𝓑 → ∞ limit gives the saturation values of the binding energy.
"""

import dataclasses
import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

from scipy import optimize

from magsat.common.errors import ConvergenceError, DomainError, NoRootError, PoleError
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants
from magsat.fields.field_strength import FieldStrength
from magsat.fields.models import permittivity
from magsat.fields.permittivity import Permittivities, PermittivityModel
from magsat.specfun import digamma

logger = logging.getLogger(__name__)

# Largest nuclear charge handled by the nonrelativistic treatment
MAX_CHARGE: int = 10

# Pole guard relative to the pole spacing unit Z/ε⊥
POLE_GUARD_RELATIVE: float = 1e-9

# Guard shrink factor and retry count when a bracket shows no sign change
POLE_GUARD_SHRINK: float = 10.0
POLE_GUARD_RETRIES: int = 5

# Deep-root upper bracket: OMEGA_MAX_SCALE * (ln calB + OMEGA_MAX_OFFSET)
OMEGA_MAX_SCALE: float = 10.0
OMEGA_MAX_OFFSET: float = 20.0

# Absolute ω tolerance passed to brentq
ROOT_XTOL: float = 1e-15

# Largest |LHS − RHS| accepted at a returned root
RESIDUAL_TOL: float = 1e-10


@dataclass(frozen=True)
class SpectrumRequest:
    """Parameters of a spectrum computation.

    The permittivities are evaluated once at construction and kept in
    ``eps``.

    Attributes:
        field: The magnetic field.
        m: Angular-momentum projection; only |m| enters.
        Z: Nuclear charge, 1..MAX_CHARGE.
        model: Permittivity model.
        n_roots: Number of roots to return, ≥ 1.
        constants: Physical constants.
        eps: Permittivities under ``model`` (derived).
    """

    field: FieldStrength
    m: int = 0
    Z: int = 1
    model: PermittivityModel = PermittivityModel.FULL
    n_roots: int = 1
    constants: PhysicalConstants = DEFAULT_CONSTANTS
    eps: Permittivities = dataclasses.field(init=False, repr=False)

    def __post_init__(self) -> None:
        """Validate the request and evaluate the permittivities."""
        if self.n_roots < 1:
            raise DomainError(f"n_roots must be at least 1, got {self.n_roots}")
        if not 1 <= self.Z <= MAX_CHARGE:
            raise DomainError(f"Z must lie in 1..{MAX_CHARGE}, got {self.Z}")
        model = PermittivityModel.from_name(self.model)
        object.__setattr__(self, "model", model)
        object.__setattr__(
            self, "eps", permittivity(self.field, model, self.constants)
        )

    @property
    def abs_m(self) -> int:
        """|m|."""
        return abs(self.m)

    @property
    def pole_unit(self) -> float:
        """Z/ε⊥, the position of the outermost digamma pole."""
        return self.Z / self.eps.eps_perp

    @property
    def log_field(self) -> float:
        """ln 𝓑, the left-hand side of the spectrum equation."""
        return math.log(self.field.cal_b)


@dataclass(frozen=True)
class SpectrumRoot:
    """A root of the spectrum equation.

    Attributes:
        omega: Binding parameter ω = √(−E/Ry).
        nu: Root index, 0 for the deepest level.
        kappa: Z/(ε⊥ω).
        bracket: The (lo, hi) interval the root was found in.
        residual: |LHS − RHS| at the root.
        energy_ry: −ω².
        energy_ev: energy_ry × Ry in eV.
        energy_mc2: energy_ry × α²/2.
    """

    omega: float
    nu: int
    kappa: float
    bracket: tuple[float, float]
    residual: float
    energy_ry: float
    energy_ev: float
    energy_mc2: float


def energy_convert(
    omega: float, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> tuple[float, float, float]:
    """Convert ω to the energy in Rydberg, eV and Mc² units.

    Args:
        omega: Binding parameter, > 0.
        constants: Physical constants.

    Returns:
        (ry, ev, mc2) with ry = −ω².

    Raises:
        DomainError: If omega ≤ 0.

    Example:
        >>> ry, ev, _ = energy_convert(1.0)
        >>> ry, round(ev, 3)
        (-1.0, -13.606)
    """
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega}")
    ry = -omega * omega
    return ry, ry * constants.rydberg_ev, ry * constants.alpha**2 / 2.0


def _digamma_term(omega: float, pole_unit: float) -> float:
    """2ψ(1 − pole_unit/ω) with the pole reported in terms of ω."""
    try:
        return 2.0 * digamma(1.0 - pole_unit / omega)
    except PoleError as err:
        raise PoleError(
            f"Spectrum equation has a pole at omega={omega} "
            f"(poles at {pole_unit:.12g}/n)"
        ) from err


def kp_rhs(omega: float, req: SpectrumRequest) -> float:
    """Right-hand side of the spectrum equation at ω.

    Args:
        omega: Binding parameter, > 0 and off the poles Z/(ε⊥n).
        req: The spectrum request.

    Returns:
        The right-hand side; the spectrum is where it equals ln 𝓑.

    Raises:
        DomainError: If omega ≤ 0.
        PoleError: At a pole.
    """
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega}")
    eps = req.eps
    return (
        eps.eps_perp * omega / req.Z
        + 2.0 * math.log(omega)
        + _digamma_term(omega, req.pole_unit)
        + 4.0 * req.constants.euler_gamma
        + math.log(2.0)
        + digamma(req.abs_m + 1.0)
        + math.log(eps.eps_par / eps.eps_perp)
    )


def deep_root_upper_bound(log_term: float) -> float:
    """Upper end of the deep-root bracket for a left-hand side ``log_term``."""
    return OMEGA_MAX_SCALE * (max(log_term, 0.0) + OMEGA_MAX_OFFSET)


def _solve_in_interval(
    residual_fn: Callable[[float], float],
    left_pole: float,
    right_end: float,
    guard: float,
    right_is_pole: bool,
    label: str,
) -> tuple[float, tuple[float, float]]:
    """Find the unique sign change of residual_fn between two poles.

    The guard is shrunk by POLE_GUARD_SHRINK up to POLE_GUARD_RETRIES times
    while the bracket shows no sign change.
    """
    for attempt in range(POLE_GUARD_RETRIES + 1):
        lo = left_pole + guard
        hi = right_end - guard if right_is_pole else right_end
        f_lo = residual_fn(lo)
        f_hi = residual_fn(hi)
        if f_lo < 0 < f_hi:
            omega = optimize.brentq(residual_fn, lo, hi, xtol=ROOT_XTOL, maxiter=500)
            return float(omega), (lo, hi)
        if attempt < POLE_GUARD_RETRIES:
            logger.warning(
                f"No sign change for {label} on [{lo:.12g}, {hi:.12g}] "
                f"(f={f_lo:.3g}, {f_hi:.3g}); shrinking pole guard to "
                f"{guard / POLE_GUARD_SHRINK:.3g}"
            )
        guard /= POLE_GUARD_SHRINK

    raise NoRootError(
        f"No root of the spectrum equation for {label} after "
        f"{POLE_GUARD_RETRIES} guard reductions"
    )


def _make_root(
    omega: float,
    nu: int,
    pole_unit: float,
    bracket: tuple[float, float],
    residual: float,
    constants: PhysicalConstants,
) -> SpectrumRoot:
    if residual > RESIDUAL_TOL:
        raise ConvergenceError(
            f"Root nu={nu} at omega={omega!r} has residual {residual:.3e} "
            f"above {RESIDUAL_TOL:g}",
            achieved_error=residual,
        )
    ry, ev, mc2 = energy_convert(omega, constants)
    return SpectrumRoot(
        omega=omega,
        nu=nu,
        kappa=pole_unit / omega,
        bracket=bracket,
        residual=residual,
        energy_ry=ry,
        energy_ev=ev,
        energy_mc2=mc2,
    )


def kp_solve(req: SpectrumRequest) -> list[SpectrumRoot]:
    """Solve the spectrum equation for the n_roots deepest even levels.

    The deep root is bracketed on (Z/ε⊥ + δ, ω_max); the root ν = n ≥ 1 on
    (Z/(ε⊥(n+1)) + δ, Z/(ε⊥n) − δ), with δ = POLE_GUARD_RELATIVE·Z/ε⊥.

    Args:
        req: The spectrum request.

    Returns:
        Roots sorted by decreasing ω (ν = 0 first).

    Raises:
        NoRootError: If a bracket never shows a sign change.
        ConvergenceError: If a root misses RESIDUAL_TOL.

    Example:
        >>> from magsat.fields import field_from
        >>> roots = kp_solve(SpectrumRequest(field_from(1e9), n_roots=3))
        >>> [r.nu for r in roots]
        [0, 1, 2]
    """
    target = req.log_field
    pole_unit = req.pole_unit
    guard = POLE_GUARD_RELATIVE * pole_unit

    def residual_fn(omega: float) -> float:
        return kp_rhs(omega, req) - target

    roots: list[SpectrumRoot] = []
    omega, bracket = _solve_in_interval(
        residual_fn,
        pole_unit,
        deep_root_upper_bound(target),
        guard,
        right_is_pole=False,
        label="nu=0",
    )
    roots.append(
        _make_root(omega, 0, pole_unit, bracket, abs(residual_fn(omega)), req.constants)
    )

    for nu in range(1, req.n_roots):
        omega, bracket = _solve_in_interval(
            residual_fn,
            pole_unit / (nu + 1),
            pole_unit / nu,
            guard,
            right_is_pole=True,
            label=f"nu={nu}",
        )
        roots.append(
            _make_root(
                omega, nu, pole_unit, bracket, abs(residual_fn(omega)), req.constants
            )
        )

    logger.info(
        f"Solved spectrum at calB={req.field.cal_b:.4g}, |m|={req.abs_m}, "
        f"model={req.model.value}: omega_0={roots[0].omega:.10g}, "
        f"{len(roots)} root(s)"
    )
    return roots


def saturation_log_term(
    m: int, cal_b: float, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Right-hand side of the saturation equation.

    ln(𝓑/(1 + α³𝓑/3π)) − 4γ − ln 2 − ψ(|m|+1), where the first term
    becomes ln(3π/α³) for 𝓑 = ∞.
    """
    alpha_cubed = constants.alpha**3
    if math.isinf(cal_b):
        log_field = math.log(3.0 * math.pi / alpha_cubed)
    else:
        log_field = math.log(cal_b) - math.log1p(alpha_cubed * cal_b / (3.0 * math.pi))
    return (
        log_field
        - 4.0 * constants.euler_gamma
        - math.log(2.0)
        - digamma(abs(m) + 1.0)
    )


def saturation_solve(
    m: int,
    Z: int = 1,
    cal_b: float = math.inf,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> SpectrumRoot:
    """Deep root of the field-limited spectrum equation.

    Solves ω/Z + 2 ln ω + 2ψ(1 − Z/ω) = saturation_log_term(m, 𝓑).

    Args:
        m: Angular-momentum projection.
        Z: Nuclear charge, 1..MAX_CHARGE.
        cal_b: Field in units of B_a, or math.inf for the saturation limit.
        constants: Physical constants.

    Returns:
        The ν = 0 root.

    Raises:
        DomainError: If Z or cal_b is out of range.
        NoRootError: If the bracket never shows a sign change.

    Example:
        >>> round(saturation_solve(0).omega, 2)
        11.21
    """
    if not 1 <= Z <= MAX_CHARGE:
        raise DomainError(f"Z must lie in 1..{MAX_CHARGE}, got {Z}")
    if not cal_b > 0:
        raise DomainError(f"calB must be positive, got {cal_b}")
    target = saturation_log_term(m, cal_b, constants)
    pole_unit = float(Z)

    def residual_fn(omega: float) -> float:
        return (
            omega / Z
            + 2.0 * math.log(omega)
            + _digamma_term(omega, pole_unit)
            - target
        )

    omega, bracket = _solve_in_interval(
        residual_fn,
        pole_unit,
        deep_root_upper_bound(target),
        POLE_GUARD_RELATIVE * pole_unit,
        right_is_pole=False,
        label=f"saturation |m|={abs(m)}",
    )
    root = _make_root(omega, 0, pole_unit, bracket, abs(residual_fn(omega)), constants)
    logger.info(
        f"Saturation root |m|={abs(m)}, Z={Z}, calB={cal_b:.4g}: omega={omega:.10g}"
    )
    return root
