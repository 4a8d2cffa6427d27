# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Even-parity shooting solver for the longitudinal Schrödinger equation.

The even solution starts at χ(0) = 1, χ′(0) = 0 and is integrated outward
with an adaptive Runge–Kutta scheme. By the Sturm oscillation theorem the
number of half-line nodes of the trial solution drops by one each time ω
crosses an even eigenvalue from below, so an eigenvalue is located by
bisecting on the node count rather than on the endpoint value.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from magsat.common.errors import BracketError, ConvergenceError, DomainError
from magsat.oracle.potentials import (
    BaseShootingPotential,
    LowestLandauPotential,
    default_omega_bracket,
)
from magsat.spectrum.kp import SpectrumRequest, SpectrumRoot, energy_convert

logger = logging.getLogger(__name__)

# Adaptive endpoint: ξ_max = XI_MAX_DECAY / ω, so χ has decayed by e^-XI_MAX_DECAY
XI_MAX_DECAY: float = 30.0

# Required decay ξ_max·ω_lo for an explicit endpoint
MIN_DECAY: float = 25.0

# |χ| above which the solution is rescaled to ±1
RENORMALIZE_ABOVE: float = 1e150

# Integrator used by solve_ivp
ODE_METHOD: str = "DOP853"

ShootingTarget = SpectrumRequest | BaseShootingPotential


@dataclass(frozen=True)
class ShootingConfig:
    """Settings of the shooting solver.

    Attributes:
        xi_max: Integration endpoint in Bohr radii; None selects
            XI_MAX_DECAY/ω for each trial ω.
        step_tol: Relative local error tolerance of the integrator.
        omega_bracket: (lo, hi) bisection bracket; None selects
            default_omega_bracket for the potential.
        max_bisections: Bisection step budget.
        omega_tol: Bracket width at which bisection stops.
    """

    xi_max: float | None = None
    step_tol: float = 1e-10
    omega_bracket: tuple[float, float] | None = None
    max_bisections: int = 100
    omega_tol: float = 1e-8

    def __post_init__(self) -> None:
        """Validate the configuration."""
        if not self.step_tol > 0:
            raise DomainError(f"step_tol must be positive, got {self.step_tol}")
        if self.max_bisections < 1:
            raise DomainError(
                f"max_bisections must be at least 1, got {self.max_bisections}"
            )
        if not self.omega_tol > 0:
            raise DomainError(f"omega_tol must be positive, got {self.omega_tol}")
        if self.omega_bracket is not None:
            lo, hi = self.omega_bracket
            if not 0 < lo < hi:
                raise DomainError(
                    f"Need 0 < lo < hi for omega_bracket, got {lo}, {hi}"
                )
            if self.xi_max is not None and self.xi_max * lo < MIN_DECAY:
                raise DomainError(
                    f"xi_max * omega_lo must be at least {MIN_DECAY}, "
                    f"got {self.xi_max} * {lo}"
                )
        if self.xi_max is not None and not self.xi_max > 0:
            raise DomainError(f"xi_max must be positive, got {self.xi_max}")

    def endpoint(self, omega: float) -> float:
        """Integration endpoint for a trial ω."""
        if self.xi_max is not None:
            return self.xi_max
        return XI_MAX_DECAY / omega


DEFAULT_SHOOTING_CONFIG = ShootingConfig()


def as_potential(target: ShootingTarget) -> BaseShootingPotential:
    """Wrap a spectrum request into its lowest-Landau-level potential."""
    if isinstance(target, SpectrumRequest):
        return LowestLandauPotential(target)
    return target


def integrate_even(
    omega: float,
    target: ShootingTarget,
    cfg: ShootingConfig = DEFAULT_SHOOTING_CONFIG,
) -> tuple[float, int]:
    """Integrate the even trial solution for a given ω.

    Args:
        omega: Trial binding parameter, > 0.
        target: A spectrum request or a shooting potential.
        cfg: Solver settings.

    Returns:
        (χ(ξ_max), number of nodes on (0, ξ_max]). χ is returned after any
        renormalizations, so only its sign is meaningful once |χ| has
        exceeded RENORMALIZE_ABOVE.

    Raises:
        DomainError: If omega ≤ 0.
        ConvergenceError: If the integrator fails.

    Example:
        >>> from magsat.oracle.potentials import FreePotential
        >>> value, nodes = integrate_even(1.0, FreePotential())
        >>> nodes, value > 0
        (0, True)
    """
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega}")
    potential = as_potential(target)
    omega_sq = omega * omega
    xi_end = cfg.endpoint(omega)

    def rhs(xi: float, y: np.ndarray) -> list[float]:
        return [y[1], (omega_sq + potential.potential_ry(xi)) * y[0]]

    def node(xi: float, y: np.ndarray) -> float:
        return float(y[0])

    def overflow(xi: float, y: np.ndarray) -> float:
        return abs(float(y[0])) - RENORMALIZE_ABOVE

    overflow.terminal = True  # type: ignore[attr-defined]
    overflow.direction = 1  # type: ignore[attr-defined]

    state = np.array([1.0, 0.0])
    xi_start = 0.0
    nodes = 0
    renormalizations = 0
    while True:
        sol = integrate.solve_ivp(
            rhs,
            (xi_start, xi_end),
            state,
            method=ODE_METHOD,
            rtol=cfg.step_tol,
            atol=cfg.step_tol * 1e-2,
            events=(node, overflow),
        )
        if sol.status == -1:
            raise ConvergenceError(
                f"Shooting integration failed at omega={omega}: {sol.message}"
            )
        nodes += len(sol.t_events[0])
        state = sol.y[:, -1]
        if sol.status != 1:
            break
        xi_start = float(sol.t[-1])
        state = state / abs(state[0])
        renormalizations += 1

    if renormalizations:
        logger.debug(
            f"Trial omega={omega:.10g} renormalized {renormalizations} time(s)"
        )
    return float(state[0]), nodes


def shoot_even_state(
    target: ShootingTarget,
    cfg: ShootingConfig = DEFAULT_SHOOTING_CONFIG,
    nodes: int = 0,
) -> SpectrumRoot:
    """Locate the even state with ``nodes`` half-line nodes by bisection.

    Args:
        target: A spectrum request or a shooting potential.
        cfg: Solver settings.
        nodes: 0 for the ground state, 1 for the first excited even state.

    Returns:
        The root; ``residual`` holds the final ω bracket width and
        ``bracket`` the final bracket.

    Raises:
        DomainError: If nodes is negative.
        BracketError: If the node count does not cross ``nodes`` on the bracket.
        ConvergenceError: If bisection exhausts max_bisections.
    """
    if nodes < 0:
        raise DomainError(f"nodes must be non-negative, got {nodes}")
    potential = as_potential(target)
    lo, hi = cfg.omega_bracket or default_omega_bracket(potential, nodes)

    _, count_lo = integrate_even(lo, potential, cfg)
    _, count_hi = integrate_even(hi, potential, cfg)
    if not (count_lo > nodes >= count_hi):
        raise BracketError(
            f"Node count does not cross {nodes} on [{lo}, {hi}] for "
            f"{potential.get_potential_name()}: {count_lo} -> {count_hi}"
        )

    for step in range(cfg.max_bisections):
        if hi - lo <= cfg.omega_tol:
            break
        mid = 0.5 * (lo + hi)
        _, count = integrate_even(mid, potential, cfg)
        if count > nodes:
            lo = mid
        else:
            hi = mid
    else:
        if hi - lo > cfg.omega_tol:
            raise ConvergenceError(
                f"Shooting bisection did not reach {cfg.omega_tol:g} in "
                f"{cfg.max_bisections} steps",
                achieved_error=hi - lo,
            )

    omega = 0.5 * (lo + hi)
    charge = potential.coulomb_charge
    ry, ev, mc2 = energy_convert(omega, potential.constants)
    logger.info(
        f"Shooting converged for {potential.get_potential_name()} "
        f"(nodes={nodes}): omega={omega:.10g} after {step + 1} step(s)"
    )
    return SpectrumRoot(
        omega=omega,
        nu=nodes,
        kappa=charge / omega,
        bracket=(lo, hi),
        residual=hi - lo,
        energy_ry=ry,
        energy_ev=ev,
        energy_mc2=mc2,
    )


def shoot_ground(
    target: ShootingTarget, cfg: ShootingConfig = DEFAULT_SHOOTING_CONFIG
) -> SpectrumRoot:
    """Ground even state (nodeless) by node-count bisection.

    Example:
        >>> from magsat.fields import field_from
        >>> req = SpectrumRequest(field_from(1e8))
        >>> shoot_ground(req).omega > 1
        True
    """
    return shoot_even_state(target, cfg, nodes=0)
