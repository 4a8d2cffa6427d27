# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Figure data: one table per panel, written as CSV with a manifest.

Panels by ``--which``:
    1: condensation curves at four fields plus the saturation curve, and the
       m-sweep at calB = 1e8 with saturation, unscreened and Coulomb columns.
    2: right-hand side of the spectrum equation against ω, with ln calB rows.
    3: deepest binding energy −ω² against calB for the full and unity models.
    4: the panel of 3 plus the saturation asymptote −ω_sat² per m.
"""

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from magsat.cli.output import build_manifest, render_csv, write_with_manifest
from magsat.common.errors import DomainError, PoleError
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants
from magsat.fields.field_strength import field_from
from magsat.fields.permittivity import PermittivityModel
from magsat.potential.curves import (
    COULOMB_COLUMN,
    NO_VP_COLUMN,
    SATURATION_COLUMN,
    UNIT_SUFFIX,
    CurveTable,
    emit_curve,
)
from magsat.potential.units import EnergyUnit
from magsat.spectrum.kp import SpectrumRequest, kp_rhs, kp_solve, saturation_solve

logger = logging.getLogger(__name__)

# Fields of the condensation panel (calB)
CONDENSATION_FIELDS: tuple[float, ...] = (1e5, 1e6, 1e7, 1e8)

# Field of the m-sweep panels (calB)
M_SWEEP_FIELD: float = 1e8

# Angular-momentum values of the m-sweep and deepest-level panels
M_VALUES: tuple[int, ...] = (0, 1, 2, 3)

# Default fields of the spectrum-equation panel (calB)
KP_CURVE_FIELDS: tuple[float, ...] = (1e5, 1e9)

# ω grid of the spectrum-equation panel
KP_OMEGA_RANGE: tuple[float, float] = (0.05, 15.0)
KP_OMEGA_POINTS: int = 600

# calB grid of the deepest-level panel: decades and points per decade
LEVEL_DECADES: tuple[int, int] = (3, 9)
LEVEL_POINTS_PER_DECADE: int = 4

# ζ grid of the potential panels
ZETA_MAX: float = 1.0
ZETA_POINTS: int = 201

SUPPORTED_FIGURES: tuple[int, ...] = (1, 2, 3, 4)


@dataclass(frozen=True)
class FigurePanel:
    """One CSV file of figure data.

    Attributes:
        name: File stem.
        columns: CSV header.
        rows: Data rows; None marks an undefined cell.
        inputs: Parameters recorded in the manifest.
    """

    name: str
    columns: list[str]
    rows: list[list[Any]]
    inputs: dict[str, Any] = field(default_factory=dict)


def _field_tag(cal_b: float) -> str:
    return f"calB{cal_b:.0e}".replace("+", "")


def _merge_tables(
    tables: Sequence[CurveTable], keys: Sequence[tuple[int, str | None, str]]
) -> tuple[list[str], list[list[Any]]]:
    """Join curve tables sharing a ζ grid into one set of columns.

    ``keys`` lists (table index, companion key or None for the main curve,
    column name).
    """
    zetas = tables[0].zetas
    columns = ["zeta"] + [name for _, _, name in keys]
    lookups = []
    for index, key, _ in keys:
        table = tables[index]
        samples = table.samples if key is None else table.companions[key]
        lookups.append({s.zeta: s.value for s in samples})
    rows = [[z, *(lookup.get(z) for lookup in lookups)] for z in zetas]
    return columns, rows


def condensation_panels(
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    units: EnergyUnit = EnergyUnit.MC2,
    zeta_max: float = ZETA_MAX,
    points: int = ZETA_POINTS,
) -> list[FigurePanel]:
    """Potential panels: condensation and the m-sweep."""
    grid = np.linspace(0.0, zeta_max, points).tolist()
    suffix = UNIT_SUFFIX[units]
    inputs: dict[str, Any] = {"zeta_max": zeta_max, "points": points, "Z": 1}

    condensation = [
        emit_curve(
            field_from(cal_b, constants=constants),
            0,
            1,
            PermittivityModel.FULL,
            grid,
            constants,
            units,
            companions=(SATURATION_COLUMN,),
        )
        for cal_b in CONDENSATION_FIELDS
    ]
    keys: list[tuple[int, str | None, str]] = [
        (i, None, f"U_{_field_tag(cal_b)}_{suffix}")
        for i, cal_b in enumerate(CONDENSATION_FIELDS)
    ]
    keys.append((0, SATURATION_COLUMN, f"U_sat_{suffix}"))
    columns, rows = _merge_tables(condensation, keys)
    panels = [
        FigurePanel(
            "fig1_condensation",
            columns,
            rows,
            {**inputs, "m": 0, "calB": list(CONDENSATION_FIELDS)},
        )
    ]

    sweep_field = field_from(M_SWEEP_FIELD, constants=constants)
    sweep = [
        emit_curve(
            sweep_field,
            m,
            1,
            PermittivityModel.FULL,
            grid,
            constants,
            units,
            companions=(SATURATION_COLUMN, NO_VP_COLUMN, COULOMB_COLUMN),
        )
        for m in M_VALUES
    ]
    main_keys: list[tuple[int, str | None, str]] = [
        (i, None, f"U_m{m}_{suffix}") for i, m in enumerate(M_VALUES)
    ]
    sweep_inputs = {**inputs, "m": list(M_VALUES), "calB": M_SWEEP_FIELD}
    columns, rows = _merge_tables(
        sweep,
        main_keys
        + [
            (i, SATURATION_COLUMN, f"U_sat_m{m}_{suffix}")
            for i, m in enumerate(M_VALUES)
        ],
    )
    panels.append(FigurePanel("fig1_msweep_saturation", columns, rows, sweep_inputs))
    columns, rows = _merge_tables(
        sweep,
        main_keys
        + [(i, NO_VP_COLUMN, f"U_novp_m{m}_{suffix}") for i, m in enumerate(M_VALUES)]
        + [(0, COULOMB_COLUMN, f"U_coul_{suffix}")],
    )
    panels.append(FigurePanel("fig1_msweep_coulomb", columns, rows, sweep_inputs))
    return panels


def _safe_rhs(omega: float, req: SpectrumRequest) -> float | None:
    try:
        return kp_rhs(omega, req)
    except PoleError:
        return None


def kp_curve_panels(
    fields: Sequence[float] = KP_CURVE_FIELDS,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    omega_range: tuple[float, float] = KP_OMEGA_RANGE,
    points: int = KP_OMEGA_POINTS,
) -> list[FigurePanel]:
    """Spectrum-equation panels: RHS(ω) curves and the ln calB levels.

    Curves are emitted for m = 0 at every field and for m = 3 at the
    strongest field. Cells that land exactly on a pole are left empty.
    """
    if not fields:
        raise DomainError("At least one field is required")
    pairs = [(cal_b, 0) for cal_b in fields] + [(max(fields), 3)]
    requests = [
        (
            cal_b,
            m,
            SpectrumRequest(
                field_from(cal_b, constants=constants), m=m, constants=constants
            ),
        )
        for cal_b, m in pairs
    ]
    omegas = np.linspace(*omega_range, points).tolist()
    columns = ["omega"] + [f"rhs_m{m}_{_field_tag(b)}" for b, m, _ in requests]
    rows = [[w, *(_safe_rhs(w, req) for _, _, req in requests)] for w in omegas]
    inputs = {
        "calB": list(fields),
        "omega_range": list(omega_range),
        "points": points,
        "model": PermittivityModel.FULL.value,
    }
    levels = FigurePanel(
        "fig2_log_fields",
        ["calB", "ln_calB"],
        [[float(b), math.log(b)] for b in fields],
        {"calB": list(fields)},
    )
    return [FigurePanel("fig2_kp_curves", columns, rows, inputs), levels]


def level_field_grid() -> list[float]:
    """Log-spaced calB grid of the deepest-level panel."""
    low, high = LEVEL_DECADES
    count = (high - low) * LEVEL_POINTS_PER_DECADE + 1
    return np.logspace(low, high, count).tolist()


def _deepest_binding(cell: tuple[float, int, str, PhysicalConstants]) -> float:
    """Binding −ω² of the deepest level for one (calB, m, model) cell."""
    cal_b, m, model, constants = cell
    req = SpectrumRequest(
        field_from(cal_b, constants=constants), m=m, model=model, constants=constants
    )
    return kp_solve(req)[0].energy_ry


def deepest_level_panels(
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    fields: Sequence[float] | None = None,
    with_saturation: bool = False,
    jobs: int = 1,
) -> list[FigurePanel]:
    """Deepest-level panel: −ω² vs calB, full and unity models, m = 0..3.

    Args:
        constants: Physical constants.
        fields: calB grid; defaults to level_field_grid().
        with_saturation: Add the −ω_sat² column per m.
        jobs: Worker processes for the (calB, m, model) grid.
    """
    grid = list(fields) if fields else level_field_grid()
    models = (PermittivityModel.FULL.value, PermittivityModel.UNITY.value)
    combos = [(m, model) for model in models for m in M_VALUES]
    cells = [(b, m, model, constants) for b in grid for m, model in combos]

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_deepest_binding, cells))
    else:
        values = [_deepest_binding(cell) for cell in cells]
    logger.info(f"Solved {len(cells)} deepest-level cells with {jobs} worker(s)")

    columns = ["calB"] + [f"E_ry_{model}_m{m}" for m, model in combos]
    width = len(combos)
    rows: list[list[Any]] = [
        [b, *values[i * width : (i + 1) * width]] for i, b in enumerate(grid)
    ]
    name = "fig3_deepest_levels"
    inputs: dict[str, Any] = {"calB": grid, "m": list(M_VALUES), "models": models}
    if with_saturation:
        saturation = [
            saturation_solve(m, constants=constants).energy_ry for m in M_VALUES
        ]
        columns += [f"E_sat_ry_m{m}" for m in M_VALUES]
        rows = [row + saturation for row in rows]
        name = "fig4_deepest_levels_saturation"
    return [FigurePanel(name, columns, rows, inputs)]


def build_figure(
    which: int,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    units: EnergyUnit = EnergyUnit.MC2,
    fields: Sequence[float] | None = None,
    jobs: int = 1,
) -> list[FigurePanel]:
    """Compute every panel of one figure.

    Raises:
        DomainError: If ``which`` is not a supported figure.
    """
    if which == 1:
        return condensation_panels(constants, units)
    if which == 2:
        return kp_curve_panels(fields or KP_CURVE_FIELDS, constants)
    if which in (3, 4):
        return deepest_level_panels(constants, fields, which == 4, jobs)
    supported = ", ".join(str(n) for n in SUPPORTED_FIGURES)
    raise DomainError(f"Unknown figure {which}. Supported: {supported}")


def write_panels(
    panels: Sequence[FigurePanel],
    out_dir: Path,
    constants: PhysicalConstants,
    which: int,
) -> list[Path]:
    """Write each panel as ``<name>.csv`` plus its manifest sidecar."""
    written = []
    for panel in panels:
        path = out_dir / f"{panel.name}.csv"
        manifest = build_manifest(
            "figures", constants, {"which": which, "panel": panel.name, **panel.inputs}
        )
        write_with_manifest(path, render_csv(panel.columns, panel.rows), manifest)
        written.append(path)
    return written
