# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Diagnostics deciding whether the spectrum approximation applies.

Functions:
    shallow_well_xi: Shallow-well coefficient Ξ.
    coulomb_ratio: Effective potential over its Coulomb asymptote.
    adiabatic_parameter: Transverse-to-longitudinal scale parameter.
    binding_to_landau_ratio: Binding energy over the Landau energy.
    validity_report: Aggregate report with a verdict.

Classes:
    ValidityReport, ValidityThresholds, Verdict
"""

from magsat.validity.diagnostics import (
    DEFAULT_THRESHOLDS,
    MIN_SAMPLE_ZETA,
    SWEEP_POINTS,
    ValidityReport,
    ValidityThresholds,
    Verdict,
    adiabatic_parameter,
    binding_to_landau_ratio,
    coulomb_ratio,
    shallow_well_xi,
    validity_report,
    xi_range,
)

__all__ = [
    "DEFAULT_THRESHOLDS",
    "MIN_SAMPLE_ZETA",
    "SWEEP_POINTS",
    "ValidityReport",
    "ValidityThresholds",
    "Verdict",
    "adiabatic_parameter",
    "binding_to_landau_ratio",
    "coulomb_ratio",
    "shallow_well_xi",
    "validity_report",
    "xi_range",
]
