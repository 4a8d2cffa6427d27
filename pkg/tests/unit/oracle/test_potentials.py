# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Unit tests for the shooting potentials."""

import math

import pytest

from magsat.common.errors import DomainError
from magsat.fields.constants import DEFAULT_CONSTANTS
from magsat.fields.field_strength import field_from
from magsat.oracle.potentials import (
    BaseShootingPotential,
    CutoffCoulombPotential,
    FreePotential,
    LowestLandauPotential,
    SaturationPotential,
    default_omega_bracket,
)
from magsat.potential.effective import effective_potential_lll, saturation_potential
from magsat.spectrum.kp import SpectrumRequest

RY_PER_MC2 = 2.0 / DEFAULT_CONSTANTS.alpha**2


class TestUnitConversion:
    """Test the ξ → ζ and Mc² → Ry conversion in the base class."""

    def test_lowest_landau_potential(self) -> None:
        """Test U_Ry(ξ) = U_mc2(ξ/α)·2/α²."""
        req = SpectrumRequest(field_from(1e8), m=1)
        potential = LowestLandauPotential(req)
        xi = 1e-3
        zeta = xi / DEFAULT_CONSTANTS.alpha
        expected = effective_potential_lll(1, zeta, req.field, req.eps) * RY_PER_MC2
        assert potential.potential_ry(xi) == pytest.approx(expected)
        assert potential.potential_ry(-xi) == potential.potential_ry(xi)
        assert potential.coulomb_charge == req.pole_unit
        assert potential.get_potential_name() == "lll"

    def test_saturation_depth(self) -> None:
        """Test the depth of the saturation well in Rydberg units."""
        potential = SaturationPotential(m=0)
        assert potential.depth_ry() == pytest.approx(
            abs(saturation_potential(0, 0.0)) * RY_PER_MC2
        )
        assert potential.coulomb_charge == 1.0

    def test_cutoff_coulomb_units_agree(self) -> None:
        """Test that the direct Rydberg form matches the Mc² form."""
        potential = CutoffCoulombPotential(Z=2, cutoff_xi=0.01)
        xi = 0.3
        via_mc2 = BaseShootingPotential.potential_ry(potential, xi)
        assert potential.potential_ry(xi) == pytest.approx(-4.0 / 0.31)
        assert via_mc2 == pytest.approx(potential.potential_ry(xi))

    def test_cutoff_must_be_positive(self) -> None:
        """Test DomainError for a non-positive cutoff."""
        with pytest.raises(DomainError, match="cutoff_xi"):
            CutoffCoulombPotential(cutoff_xi=0.0)

    def test_free(self) -> None:
        """Test that the free potential vanishes."""
        free = FreePotential()
        assert free.potential_ry(1.0) == 0.0
        assert free.depth_ry() == 0.0
        assert free.coulomb_charge == 0.0


class TestDefaultBracket:
    """Test the default ω bracket."""

    def test_bracket(self) -> None:
        """Test lo = 0.5/(nodes+1) and hi = √depth + 1."""
        potential = CutoffCoulombPotential(cutoff_xi=0.02)
        assert default_omega_bracket(potential) == pytest.approx((0.5, 11.0))
        lo, hi = default_omega_bracket(potential, nodes=1)
        assert lo == 0.25
        assert hi == pytest.approx(math.sqrt(100.0) + 1.0)
