# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""JSON report schemas of the CLI subcommands.

Each subcommand's ``--out json`` output validates against one of these
models (the validity subcommand reuses ValidityReport).
"""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from magsat.fields.field_strength import FieldStrength
from magsat.fields.permittivity import Permittivities
from magsat.spectrum.kp import SpectrumRoot


class PermReport(BaseModel):
    """Permittivities at one field."""

    model_config = ConfigDict(frozen=True)

    cal_b: float = Field(..., description="Field in units of B_a")
    b: float = Field(..., description="Field in units of B_cr")
    gauss: float = Field(..., description="Field in gauss")
    range_flag: str = Field(..., description="Working-range classification")
    model: str = Field(..., description="Permittivity model")
    eps_perp: float = Field(..., description="Transverse permittivity")
    eps_par: float = Field(..., description="Longitudinal permittivity")

    @classmethod
    def from_result(cls, field: FieldStrength, eps: Permittivities) -> "PermReport":
        """Build the report from a field and its permittivities."""
        return cls(
            cal_b=field.cal_b,
            b=field.b,
            gauss=field.gauss,
            range_flag=field.range_flag.value,
            model=eps.model.value,
            eps_perp=eps.eps_perp,
            eps_par=eps.eps_par,
        )


class RootRecord(BaseModel):
    """One level of the spectrum."""

    model_config = ConfigDict(frozen=True)

    nu: int
    omega: float
    kappa: float
    energy_ry: float
    energy_ev: float
    energy_mc2: float
    residual: float

    @classmethod
    def from_root(cls, root: SpectrumRoot) -> "RootRecord":
        """Copy the public fields of a SpectrumRoot."""
        return cls(
            nu=root.nu,
            omega=root.omega,
            kappa=root.kappa,
            energy_ry=root.energy_ry,
            energy_ev=root.energy_ev,
            energy_mc2=root.energy_mc2,
            residual=root.residual,
        )


class SpectrumReport(BaseModel):
    """Roots of the spectrum equation at one field."""

    model_config = ConfigDict(frozen=True)

    cal_b: float
    b: float
    m: int
    Z: int
    model: str
    log_field: float = Field(..., description="ln calB, the left-hand side")
    roots: list[RootRecord]


class SaturationRecord(BaseModel):
    """Saturation level for one m."""

    model_config = ConfigDict(frozen=True)

    m: int
    omega: float
    energy_ry: float
    energy_kev: float


class SaturationReport(BaseModel):
    """Saturation levels for several m."""

    model_config = ConfigDict(frozen=True)

    Z: int
    cal_b: float | None = Field(None, description="Field; null for calB = inf")
    levels: list[SaturationRecord]


class OracleReport(BaseModel):
    """Spectrum-equation root next to the shooting result."""

    model_config = ConfigDict(frozen=True)

    cal_b: float | None
    m: int
    Z: int
    model: str
    potential: str
    nodes: int
    omega_kp: float
    omega_shooting: float
    relative_difference: float
    bracket_width: float
    within_band: bool = Field(..., description="relative_difference <= band")


class CurveReport(BaseModel):
    """A tabulated potential curve."""

    model_config = ConfigDict(frozen=True)

    label: str
    metadata: dict[str, Any]
    columns: list[str]
    rows: list[list[float | None]]
