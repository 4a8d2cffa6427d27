# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Unit tests for the spectrum equation solver.

This module tests:
- Request validation and derived quantities
- Root bracketing between digamma poles and root properties
- Saturation levels and their agreement with the asymptotic model
- Energy unit conversions
"""

import itertools
import math

import pytest

from magsat.common.errors import ConvergenceError, DomainError, NoRootError, PoleError
from magsat.fields.constants import DEFAULT_CONSTANTS
from magsat.fields.field_strength import field_from
from magsat.fields.permittivity import PermittivityModel
from magsat.spectrum import kp
from magsat.spectrum.kp import (
    RESIDUAL_TOL,
    SpectrumRequest,
    energy_convert,
    kp_rhs,
    kp_solve,
    saturation_log_term,
    saturation_solve,
)

SATURATION_OMEGAS = {0: 11.213, 1: 10.393, 2: 9.987, 3: 9.719}


class TestSpectrumRequest:
    """Test request validation."""

    def test_derived_values(self) -> None:
        """Test eps, pole_unit and log_field."""
        req = SpectrumRequest(field_from(1e8), m=-2)
        assert req.abs_m == 2
        assert req.pole_unit == pytest.approx(1.0 / req.eps.eps_perp)
        assert req.log_field == pytest.approx(math.log(1e8))
        assert req.model is PermittivityModel.FULL

    def test_model_name_is_normalized(self) -> None:
        """Test that a string model becomes the enum member."""
        req = SpectrumRequest(field_from(1e8), model="none")  # type: ignore[arg-type]
        assert req.model is PermittivityModel.UNITY
        assert (req.eps.eps_perp, req.eps.eps_par) == (1.0, 1.0)

    @pytest.mark.parametrize(  # type: ignore[untyped-decorator]
        ("kwargs", "match"),
        [({"n_roots": 0}, "n_roots"), ({"Z": 0}, "Z must"), ({"Z": 11}, "Z must")],
    )
    def test_invalid(self, kwargs: dict[str, int], match: str) -> None:
        """Test DomainError for invalid requests."""
        with pytest.raises(DomainError, match=match):
            SpectrumRequest(field_from(1e8), **kwargs)  # type: ignore[arg-type]


class TestKpRhs:
    """Test the right-hand side of the spectrum equation."""

    def test_pole(self) -> None:
        """Test PoleError exactly at ω = Z/ε⊥."""
        req = SpectrumRequest(field_from(1e8), model=PermittivityModel.UNITY)
        with pytest.raises(PoleError, match="omega=1"):
            kp_rhs(1.0, req)

    def test_non_positive_omega(self) -> None:
        """Test DomainError for ω ≤ 0."""
        req = SpectrumRequest(field_from(1e8))
        with pytest.raises(DomainError):
            kp_rhs(0.0, req)

    def test_increasing_between_poles(self) -> None:
        """Test that the RHS increases beyond the outermost pole."""
        req = SpectrumRequest(field_from(1e8))
        omegas = [req.pole_unit * f for f in (1.01, 1.5, 3.0, 10.0, 20.0)]
        values = [kp_rhs(w, req) for w in omegas]
        assert values == sorted(values)


class TestKpSolve:
    """Test root finding."""

    @pytest.mark.parametrize("cal_b", [1e5, 1e7, 1e9])  # type: ignore[untyped-decorator]
    @pytest.mark.parametrize("m", [0, 1, 2, 3])  # type: ignore[untyped-decorator]
    def test_root_properties(self, cal_b: float, m: int) -> None:
        """Test residual, bracketing, κ and energy bookkeeping of each root."""
        req = SpectrumRequest(field_from(cal_b), m=m, n_roots=3)
        roots = kp_solve(req)

        assert [r.nu for r in roots] == [0, 1, 2]
        assert roots[0].omega > req.pole_unit
        for nu, root in enumerate(roots[1:], start=1):
            assert req.pole_unit / (nu + 1) < root.omega < req.pole_unit / nu
        for root in roots:
            lo, hi = root.bracket
            assert lo <= root.omega <= hi
            assert root.residual <= RESIDUAL_TOL
            assert abs(kp_rhs(root.omega, req) - req.log_field) <= RESIDUAL_TOL
            assert root.kappa == pytest.approx(req.pole_unit / root.omega)
            assert root.energy_ry == pytest.approx(-root.omega**2)

    def test_deepest_level_grows_with_field(self) -> None:
        """Test that ω₀ increases with calB."""
        omegas = [
            kp_solve(SpectrumRequest(field_from(b)))[0].omega
            for b in (1e5, 1e6, 1e7, 1e8, 1e9)
        ]
        assert omegas == sorted(omegas)

    def test_levels_deepen_with_smaller_m(self) -> None:
        """Test ω₀(|m|) decreasing in |m|."""
        field = field_from(1e8)
        omegas = [kp_solve(SpectrumRequest(field, m=m))[0].omega for m in range(4)]
        assert omegas == sorted(omegas, reverse=True)

    def test_screening_bounds_the_level(self) -> None:
        """Test that the screened level stays below the saturation value."""
        for m in range(4):
            deep = kp_solve(SpectrumRequest(field_from(1e9), m=m))[0].omega
            assert deep < saturation_solve(m).omega

    def test_unscreened_level(self) -> None:
        """Test the unity-model level at calB = 1e5."""
        req = SpectrumRequest(field_from(1e5), model=PermittivityModel.UNITY)
        root = kp_solve(req)[0]
        assert 6.8 < root.omega < 7.1

    def test_unscreened_exceeds_screened(self) -> None:
        """Test that vacuum polarization makes the level shallower."""
        field = field_from(1e9)
        full = kp_solve(SpectrumRequest(field))[0].omega
        unity = kp_solve(SpectrumRequest(field, model=PermittivityModel.UNITY))[0].omega
        assert unity > full

    def test_higher_charge(self) -> None:
        """Test that Z = 2 binds deeper than Z = 1."""
        field = field_from(1e8)
        one = kp_solve(SpectrumRequest(field, Z=1))[0]
        req = SpectrumRequest(field, Z=2)
        two = kp_solve(req)[0]
        assert two.omega > one.omega
        assert two.omega > req.pole_unit

    def test_residual_above_tolerance(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test ConvergenceError when a root misses the residual tolerance."""
        monkeypatch.setattr(kp, "RESIDUAL_TOL", -1.0)
        with pytest.raises(ConvergenceError) as exc_info:
            kp_solve(SpectrumRequest(field_from(1e8)))
        assert exc_info.value.achieved_error is not None

    def test_no_sign_change(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test NoRootError when the deep bracket ends below the root."""
        monkeypatch.setattr(kp, "deep_root_upper_bound", lambda log_term: 1.05)
        with pytest.raises(NoRootError, match="nu=0"):
            kp_solve(SpectrumRequest(field_from(1e8), model=PermittivityModel.UNITY))


class TestSaturation:
    """Test the field-limited equation."""

    @pytest.mark.parametrize(("m", "expected"), list(SATURATION_OMEGAS.items()))  # type: ignore[untyped-decorator]
    def test_saturation_levels(self, m: int, expected: float) -> None:
        """Test ω_sat per |m| to 0.5%."""
        root = saturation_solve(m)
        assert root.omega == pytest.approx(expected, rel=5e-3)
        assert root.residual <= RESIDUAL_TOL

    def test_ground_energy(self) -> None:
        """Test E_sat ≈ −1.71 keV for |m| = 0."""
        root = saturation_solve(0)
        assert root.energy_ev == pytest.approx(-1710.6, rel=5e-3)

    @pytest.mark.parametrize("cal_b", [1e6, 1e9, 1e12])  # type: ignore[untyped-decorator]
    def test_matches_asymptotic_model(self, cal_b: float) -> None:
        """Test that the asymptotic-model equation is the field-limited one."""
        for m in (0, 2):
            req = SpectrumRequest(
                field_from(cal_b), m=m, model=PermittivityModel.ASYMPTOTIC
            )
            expected = kp_solve(req)[0].omega
            assert saturation_solve(m, cal_b=cal_b).omega == pytest.approx(
                expected, rel=1e-9
            )

    def test_asymptotic_levels_saturate(self) -> None:
        """Test ω₀ rising with calB and settling just below ω_sat."""
        omegas = [
            kp_solve(
                SpectrumRequest(field_from(b), model=PermittivityModel.ASYMPTOTIC)
            )[0].omega
            for b in (1e5, 1e6, 1e7, 1e8, 1e9)
        ]
        limit = saturation_solve(0).omega

        assert all(low < high for low, high in itertools.pairwise(omegas))
        assert 0.95 * limit < omegas[-1] < limit

    def test_unscreened_level_passes_saturation(self) -> None:
        """Test that without screening ω₀ at calB = 1e9 exceeds ω_sat."""
        req = SpectrumRequest(field_from(1e9), model=PermittivityModel.UNITY)
        assert kp_solve(req)[0].omega > saturation_solve(0).omega

    def test_finite_field_below_limit(self) -> None:
        """Test that a finite field gives a shallower level than the limit."""
        assert saturation_solve(0, cal_b=1e9).omega < saturation_solve(0).omega

    def test_log_term_limit(self) -> None:
        """Test that the finite-field term approaches the infinite one."""
        far = saturation_log_term(0, 1e20)
        limit = saturation_log_term(0, math.inf)
        assert far == pytest.approx(limit, abs=1e-6)

    @pytest.mark.parametrize(  # type: ignore[untyped-decorator]
        ("kwargs", "match"),
        [({"Z": 0}, "Z must"), ({"cal_b": 0.0}, "calB"), ({"cal_b": -1.0}, "calB")],
    )
    def test_invalid(self, kwargs: dict[str, float], match: str) -> None:
        """Test DomainError for out-of-range arguments."""
        with pytest.raises(DomainError, match=match):
            saturation_solve(0, **kwargs)  # type: ignore[arg-type]


class TestEnergyConvert:
    """Test the ω → energy conversion."""

    def test_units(self) -> None:
        """Test Ry, eV and Mc² values."""
        ry, ev, mc2 = energy_convert(2.0)
        assert ry == -4.0
        assert ev == pytest.approx(-4.0 * DEFAULT_CONSTANTS.rydberg_ev)
        assert mc2 == pytest.approx(-4.0 * DEFAULT_CONSTANTS.alpha**2 / 2)

    def test_rejects_non_positive(self) -> None:
        """Test DomainError for ω ≤ 0."""
        with pytest.raises(DomainError):
            energy_convert(-1.0)
