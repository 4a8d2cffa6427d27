# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Unit tests for the shooting solver.

This module tests:
- Configuration validation
- Trial integration against closed forms
- Node-count bisection on model potentials
- Agreement with the spectrum equation (slow)
"""

import math

import pytest

from magsat.common.errors import BracketError, ConvergenceError, DomainError
from magsat.fields.field_strength import field_from
from magsat.oracle.potentials import (
    CutoffCoulombPotential,
    FreePotential,
    SaturationPotential,
)
from magsat.oracle.shooting import (
    MIN_DECAY,
    ShootingConfig,
    integrate_even,
    shoot_even_state,
    shoot_ground,
)
from magsat.spectrum.kp import SpectrumRequest, kp_solve, saturation_solve

# Relative band within which shooting and the spectrum equation must agree
ORACLE_BAND = 0.05

# Looser bisection for the slow comparisons
FAST_CONFIG = ShootingConfig(omega_tol=1e-6)


class TestShootingConfig:
    """Test configuration validation."""

    def test_defaults(self) -> None:
        """Test the adaptive endpoint."""
        cfg = ShootingConfig()
        assert cfg.endpoint(2.0) == pytest.approx(15.0)

    def test_explicit_endpoint(self) -> None:
        """Test that an explicit xi_max is used as is."""
        assert ShootingConfig(xi_max=40.0).endpoint(5.0) == 40.0

    @pytest.mark.parametrize(  # type: ignore[untyped-decorator]
        ("kwargs", "match"),
        [
            ({"step_tol": 0.0}, "step_tol"),
            ({"max_bisections": 0}, "max_bisections"),
            ({"omega_tol": -1.0}, "omega_tol"),
            ({"omega_bracket": (2.0, 1.0)}, "lo < hi"),
            ({"xi_max": -1.0}, "xi_max"),
            ({"xi_max": 10.0, "omega_bracket": (1.0, 5.0)}, str(MIN_DECAY)),
        ],
    )
    def test_invalid(self, kwargs: dict[str, object], match: str) -> None:
        """Test DomainError for invalid settings."""
        with pytest.raises(DomainError, match=match):
            ShootingConfig(**kwargs)  # type: ignore[arg-type]


class TestIntegrateEven:
    """Test the trial integration."""

    def test_free_solution_is_cosh(self) -> None:
        """Test χ(ξ) = cosh(ωξ) without a potential."""
        value, nodes = integrate_even(1.5, FreePotential(), ShootingConfig(xi_max=20.0))
        assert nodes == 0
        assert value == pytest.approx(math.cosh(30.0), rel=1e-6)

    def test_renormalization_keeps_sign(self) -> None:
        """Test that overflowing solutions are rescaled without losing the sign."""
        value, nodes = integrate_even(
            20.0, FreePotential(), ShootingConfig(xi_max=30.0)
        )
        assert nodes == 0
        assert value > 0
        assert math.isfinite(value)

    def test_node_count_drops_through_ground_state(self) -> None:
        """Test the Sturm property on the cut-off Coulomb well."""
        potential = CutoffCoulombPotential(cutoff_xi=0.05)
        ground = shoot_ground(potential, FAST_CONFIG).omega
        _, below = integrate_even(0.9 * ground, potential)
        _, above = integrate_even(1.1 * ground, potential)
        assert below > above == 0

    def test_non_positive_omega(self) -> None:
        """Test DomainError for ω ≤ 0."""
        with pytest.raises(DomainError):
            integrate_even(0.0, FreePotential())


class TestShootEvenState:
    """Test bisection on the node count."""

    def test_cutoff_coulomb_deepens(self) -> None:
        """Test that shrinking the cutoff deepens the ground state."""
        wide = shoot_ground(CutoffCoulombPotential(cutoff_xi=0.1), FAST_CONFIG)
        narrow = shoot_ground(CutoffCoulombPotential(cutoff_xi=0.01), FAST_CONFIG)
        assert narrow.omega > wide.omega > 1.0

    def test_excited_state_below_ground(self) -> None:
        """Test that the one-node state is shallower than the ground state."""
        potential = CutoffCoulombPotential(cutoff_xi=0.05)
        ground = shoot_even_state(potential, FAST_CONFIG, nodes=0)
        excited = shoot_even_state(potential, FAST_CONFIG, nodes=1)
        assert excited.nu == 1
        assert excited.omega < ground.omega

    def test_result_bookkeeping(self) -> None:
        """Test bracket, residual and κ of the returned root."""
        root = shoot_ground(CutoffCoulombPotential(Z=2, cutoff_xi=0.05), FAST_CONFIG)
        lo, hi = root.bracket
        assert lo <= root.omega <= hi
        assert root.residual == pytest.approx(hi - lo)
        assert root.residual <= FAST_CONFIG.omega_tol
        assert root.kappa == pytest.approx(2.0 / root.omega)
        assert root.energy_ry == pytest.approx(-root.omega**2)

    def test_bracket_without_crossing(self) -> None:
        """Test BracketError when the bracket misses the state."""
        cfg = ShootingConfig(omega_bracket=(0.5, 0.9))
        with pytest.raises(BracketError, match="does not cross"):
            shoot_ground(FreePotential(), cfg)

    def test_bisection_budget(self) -> None:
        """Test ConvergenceError when bisection runs out of steps."""
        cfg = ShootingConfig(max_bisections=2, omega_tol=1e-12)
        with pytest.raises(ConvergenceError, match="did not reach"):
            shoot_ground(CutoffCoulombPotential(cutoff_xi=0.05), cfg)

    def test_negative_nodes(self) -> None:
        """Test DomainError for a negative node count."""
        with pytest.raises(DomainError, match="nodes"):
            shoot_even_state(FreePotential(), nodes=-1)


@pytest.mark.slow  # type: ignore[untyped-decorator]
class TestAgreementWithSpectrumEquation:
    """Test that shooting reproduces the spectrum equation."""

    @pytest.mark.parametrize("cal_b", [1e7, 1e8, 1e9])  # type: ignore[untyped-decorator]
    @pytest.mark.parametrize("m", [0, 1])  # type: ignore[untyped-decorator]
    def test_deepest_level(self, cal_b: float, m: int) -> None:
        """Test the deepest level under full screening."""
        req = SpectrumRequest(field_from(cal_b), m=m)
        expected = kp_solve(req)[0].omega
        shot = shoot_ground(req, FAST_CONFIG).omega
        assert abs(shot - expected) / expected <= ORACLE_BAND

    def test_saturation_level(self) -> None:
        """Test the ground state of the saturation potential."""
        shot = shoot_ground(SaturationPotential(m=0), FAST_CONFIG).omega
        assert shot == pytest.approx(saturation_solve(0).omega, rel=ORACLE_BAND)
