# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Tabulated effective-potential curves.

A CurveTable holds the lowest-Landau-level potential on a ζ grid together
with optional companion columns: the saturation curve (``U_sat``), the
unscreened curve (``U_novp``) and the Coulomb asymptote (``U_coul``, absent
at ζ = 0).
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from magsat.common.errors import DomainError
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants
from magsat.fields.field_strength import FieldStrength
from magsat.fields.models import permittivity
from magsat.fields.permittivity import PermittivityModel
from magsat.potential.effective import (
    coulomb_asymptote,
    effective_potential_lll,
    saturation_potential,
)
from magsat.potential.units import EnergyUnit, convert_energy

logger = logging.getLogger(__name__)

# Companion column keys in output order
SATURATION_COLUMN: str = "sat"
NO_VP_COLUMN: str = "novp"
COULOMB_COLUMN: str = "coul"
COMPANION_ORDER: tuple[str, ...] = (SATURATION_COLUMN, NO_VP_COLUMN, COULOMB_COLUMN)

# Column suffix per energy unit
UNIT_SUFFIX: dict[EnergyUnit, str] = {EnergyUnit.MC2: "mc2", EnergyUnit.RYDBERG: "ry"}


@dataclass(frozen=True)
class PotentialSample:
    """One point of a potential curve.

    Attributes:
        zeta: Longitudinal distance z/λ_C.
        value: Potential energy in ``units_tag`` units.
        units_tag: Energy unit of ``value``.
    """

    zeta: float
    value: float
    units_tag: EnergyUnit = EnergyUnit.MC2


@dataclass(frozen=True)
class CurveMetadata:
    """Physical parameters a curve was computed for."""

    cal_b: float
    b: float
    m: int
    Z: int
    model: str
    units: EnergyUnit


@dataclass(frozen=True)
class CurveTable:
    """A potential curve with optional companion columns.

    Attributes:
        label: Human-readable curve label.
        samples: Main-curve samples with strictly increasing zeta.
        metadata: Parameters of the curve.
        companions: Companion samples keyed by column name; a companion may
            skip abscissae where it is undefined.
    """

    label: str
    samples: tuple[PotentialSample, ...]
    metadata: CurveMetadata
    companions: Mapping[str, tuple[PotentialSample, ...]] = field(
        default_factory=dict
    )

    def __post_init__(self) -> None:
        """Check that the abscissae are strictly increasing."""
        zetas = np.array([s.zeta for s in self.samples], dtype=float)
        if zetas.size > 1 and not np.all(np.diff(zetas) > 0):
            raise DomainError(f"Curve '{self.label}' needs strictly increasing zeta")

    @property
    def zetas(self) -> list[float]:
        """Abscissae of the main curve."""
        return [s.zeta for s in self.samples]

    def column_names(self) -> list[str]:
        """CSV header: zeta, main column, then companions in fixed order."""
        suffix = UNIT_SUFFIX[self.metadata.units]
        names = ["zeta", f"U_{suffix}"]
        names += [
            f"U_{key}_{suffix}" for key in COMPANION_ORDER if key in self.companions
        ]
        return names

    def rows(self) -> list[list[float | None]]:
        """Rows matching column_names(); missing companion values are None."""
        lookups = [
            {s.zeta: s.value for s in self.companions[key]}
            for key in COMPANION_ORDER
            if key in self.companions
        ]
        return [
            [s.zeta, s.value, *(lookup.get(s.zeta) for lookup in lookups)]
            for s in self.samples
        ]

    def to_json_dict(self) -> dict[str, Any]:
        """JSON-ready mapping of metadata, columns and rows."""
        meta = self.metadata
        return {
            "label": self.label,
            "metadata": {
                "calB": meta.cal_b,
                "b": meta.b,
                "m": meta.m,
                "Z": meta.Z,
                "model": meta.model,
                "units": meta.units.value,
            },
            "columns": self.column_names(),
            "rows": self.rows(),
        }


def _validate_grid(z_grid: Sequence[float]) -> list[float]:
    grid = [float(z) for z in z_grid]
    if len(grid) > 1 and not np.all(np.diff(np.asarray(grid)) > 0):
        raise DomainError("The zeta grid must be strictly increasing")
    return grid


def emit_curve(
    field_strength: FieldStrength,
    m: int,
    Z: int,
    model: PermittivityModel | str,
    z_grid: Sequence[float],
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    units: EnergyUnit = EnergyUnit.MC2,
    companions: Sequence[str] = (SATURATION_COLUMN, NO_VP_COLUMN),
) -> CurveTable:
    """Tabulate the lowest-Landau-level potential on a ζ grid.

    Args:
        field_strength: The magnetic field.
        m: Angular-momentum projection.
        Z: Nuclear charge.
        model: Permittivity model of the main curve.
        z_grid: Strictly increasing ζ values; may be empty.
        constants: Physical constants.
        units: Energy unit of the emitted values.
        companions: Companion columns to add, any of "sat", "novp", "coul".

    Returns:
        The curve table.

    Raises:
        DomainError: If the grid is not increasing or a companion is unknown.
    """
    grid = _validate_grid(z_grid)
    unknown = [key for key in companions if key not in COMPANION_ORDER]
    if unknown:
        raise DomainError(
            f"Unknown companion column(s) {', '.join(unknown)}. "
            f"Known: {', '.join(COMPANION_ORDER)}"
        )
    model_name = PermittivityModel.from_name(model)
    eps = permittivity(field_strength, model_name, constants)
    unscreened = permittivity(field_strength, PermittivityModel.UNITY, constants)

    def sample(zeta: float, value_mc2: float) -> PotentialSample:
        return PotentialSample(zeta, convert_energy(value_mc2, units, constants), units)

    main = tuple(
        sample(z, effective_potential_lll(m, z, field_strength, eps, Z, constants))
        for z in grid
    )
    extra: dict[str, tuple[PotentialSample, ...]] = {}
    if SATURATION_COLUMN in companions:
        extra[SATURATION_COLUMN] = tuple(
            sample(z, saturation_potential(m, z, Z, constants)) for z in grid
        )
    if NO_VP_COLUMN in companions:
        extra[NO_VP_COLUMN] = tuple(
            sample(
                z,
                effective_potential_lll(m, z, field_strength, unscreened, Z, constants),
            )
            for z in grid
        )
    if COULOMB_COLUMN in companions:
        extra[COULOMB_COLUMN] = tuple(
            sample(z, coulomb_asymptote(z, eps, Z, constants)) for z in grid if z != 0.0
        )

    label = f"calB={field_strength.cal_b:.3g}, |m|={abs(m)}, {model_name.value}"
    logger.debug(f"Emitted curve '{label}' with {len(main)} samples")
    return CurveTable(
        label=label,
        samples=main,
        metadata=CurveMetadata(
            cal_b=field_strength.cal_b,
            b=field_strength.b,
            m=m,
            Z=Z,
            model=model_name.value,
            units=units,
        ),
        companions=extra,
    )
