# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Unit tests for the built-in permittivity models and permittivity().

This module tests:
- Full one-loop values at reference fields
- The asymptotic and unity models
- Agreement of full and asymptotic models at large fields
- The Template Method orchestration in BasePermittivityModel
"""

import math

import pytest

from magsat.common.errors import DomainError
from magsat.fields.base_model import BasePermittivityModel
from magsat.fields.constants import DEFAULT_CONSTANTS
from magsat.fields.field_strength import FieldStrength, RangeFlag, field_from
from magsat.fields.models import (
    FULL_MODEL_MIN_B,
    AsymptoticPermittivityModel,
    FullPermittivityModel,
    UnityPermittivityModel,
    permittivity,
)
from magsat.fields.permittivity import Permittivities, PermittivityModel

ALPHA = DEFAULT_CONSTANTS.alpha


class TestFullModel:
    """Test the one-loop Euler–Heisenberg permittivities."""

    def test_reference_field_1e8(self) -> None:
        """Test ε⊥ ≈ 0.9947 and ε∥ ≈ 5.116 at 𝓑 = 1e8."""
        eps = permittivity(field_from(1e8), "full")
        assert eps.eps_perp == pytest.approx(0.994742, abs=2e-5)
        assert eps.eps_par == pytest.approx(5.11630, rel=1e-4)
        assert eps.model is PermittivityModel.FULL

    def test_critical_field(self) -> None:
        """Test that the vacuum barely responds at b = 1."""
        eps = permittivity(field_from(1.0, "b"), "full")
        assert eps.eps_perp == pytest.approx(0.99993, abs=2e-5)
        assert eps.eps_par == pytest.approx(1.00021, abs=2e-5)

    def test_weak_field_limit(self) -> None:
        """Test that both permittivities tend to one for b ≪ 1."""
        eps = permittivity(field_from(0.01, "b"), "full")
        assert abs(eps.eps_perp - 1.0) < 1e-6
        assert 0.0 < eps.eps_par - 1.0 < 1e-6

    def test_longitudinal_grows_with_field(self) -> None:
        """Test that ε∥ increases monotonically over the working range."""
        values = [
            permittivity(field_from(b, "b"), "full").eps_par
            for b in (1.0, 10.0, 100.0, 1e3, 1e4, 9e4)
        ]
        assert values == sorted(values)
        assert len(set(values)) == len(values)

    def test_matches_asymptotic_at_large_field(self) -> None:
        """Test ε∥(full)/ε∥(asymptotic) → 1 at 𝓑 = 1e9."""
        field = field_from(1e9)
        full = permittivity(field, "full")
        asymptotic = permittivity(field, "asymptotic")
        assert full.eps_par == pytest.approx(42.22, rel=1e-3)
        assert full.eps_par / asymptotic.eps_par == pytest.approx(1.0, abs=1e-3)
        assert full.eps_perp == pytest.approx(0.99296, abs=5e-5)

    def test_rejects_tiny_field(self) -> None:
        """Test DomainError below FULL_MODEL_MIN_B."""
        with pytest.raises(DomainError, match="b >"):
            permittivity(field_from(FULL_MODEL_MIN_B / 2, "b"), "full")


class TestSimpleModels:
    """Test the asymptotic and unity models."""

    @pytest.mark.parametrize("b", [1.0, 5.3, 5.3e3])  # type: ignore[untyped-decorator]
    def test_asymptotic_formula(self, b: float) -> None:
        """Test ε⊥ = 1, ε∥ = 1 + αb/3π."""
        eps = permittivity(field_from(b, "b"), PermittivityModel.ASYMPTOTIC)
        assert eps.eps_perp == 1.0
        assert eps.eps_par == pytest.approx(1.0 + ALPHA * b / (3.0 * math.pi))

    @pytest.mark.parametrize("name", ["unity", "none"])  # type: ignore[untyped-decorator]
    def test_unity_and_alias(self, name: str) -> None:
        """Test that unity and its "none" alias give (1, 1)."""
        eps = permittivity(field_from(1.0, "b"), name)
        assert (eps.eps_perp, eps.eps_par) == (1.0, 1.0)
        assert eps.model is PermittivityModel.UNITY

    def test_unknown_model(self) -> None:
        """Test DomainError listing the known models."""
        with pytest.raises(DomainError, match="asymptotic"):
            permittivity(field_from(1.0, "b"), "two-loop")

    def test_model_classes_report_their_names(self) -> None:
        """Test get_model_name on every built-in model."""
        assert FullPermittivityModel().get_model_name() == "full"
        assert AsymptoticPermittivityModel().get_model_name() == "asymptotic"
        assert UnityPermittivityModel().get_model_name() == "unity"


class NegativeModel(BasePermittivityModel):
    """A broken model returning a non-physical permittivity."""

    def get_model_name(self) -> str:
        """Return a registered name so tagging would succeed."""
        return "unity"

    def compute(self, field: FieldStrength) -> tuple[float, float]:
        """Return a negative ε∥."""
        return 1.0, -0.5


class TestBaseModel:
    """Test the Template Method in BasePermittivityModel."""

    def test_rejects_non_positive_result(self) -> None:
        """Test DomainError when compute() returns a non-positive value."""
        with pytest.raises(DomainError, match="non-positive"):
            NegativeModel().evaluate(field_from(1.0, "b"))

    def test_default_validation_rejects_zero_field(self) -> None:
        """Test the default validate_field hook."""
        zero = FieldStrength(
            b=0.0, cal_b=0.0, gauss=0.0, range_flag=RangeFlag.BELOW_RANGE
        )
        with pytest.raises(DomainError, match="b > 0"):
            UnityPermittivityModel().evaluate(zero)

    def test_result_is_tagged(self) -> None:
        """Test that evaluate() returns tagged Permittivities."""
        eps = AsymptoticPermittivityModel().evaluate(field_from(2.0, "b"))
        assert isinstance(eps, Permittivities)
        assert eps.model is PermittivityModel.ASYMPTOTIC

    def test_cannot_instantiate_abstract_base(self) -> None:
        """Test that the base class is abstract."""
        with pytest.raises(TypeError):
            BasePermittivityModel()  # type: ignore[abstract]
