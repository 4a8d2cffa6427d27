# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Landau states, the anisotropic Coulomb potential and effective potentials.

Classes:
    QuantumNumbers: (n_ρ, m, σ, ν) with the lowest-Landau-level predicate.
    PotentialSample, CurveTable: Tabulated potential curves.
    EnergyUnit: Mc² or Rydberg.

Functions:
    radial_function: Landau radial function in a_H units.
    landau_energy: Transverse Landau energy.
    anisotropic_coulomb: Screened nuclear potential.
    on_orbit_potential: Potential on the lowest Landau orbit.
    effective_potential_element: Matrix element by adaptive quadrature.
    effective_potential_lll: Lowest-Landau-level closed form.
    saturation_potential: Infinite-field limit of the closed form.
    coulomb_asymptote: Large-distance Coulomb form.
    emit_curve: Tabulate a curve with companion columns.
"""

from magsat.potential.curves import (
    COULOMB_COLUMN,
    NO_VP_COLUMN,
    SATURATION_COLUMN,
    CurveMetadata,
    CurveTable,
    PotentialSample,
    emit_curve,
)
from magsat.potential.effective import (
    anisotropic_coulomb,
    coulomb_asymptote,
    effective_potential_element,
    effective_potential_lll,
    lll_origin_factor,
    on_orbit_potential,
    saturation_potential,
)
from magsat.potential.landau import (
    QuantumNumbers,
    Spin,
    landau_energy,
    radial_density,
    radial_function,
)
from magsat.potential.units import (
    EnergyUnit,
    bohr_radius,
    convert_energy,
    magnetic_length,
    mc2_to_rydberg,
    rydberg_to_mc2,
    xi_from_zeta,
    zeta_from_xi,
)

__all__ = [
    "COULOMB_COLUMN",
    "NO_VP_COLUMN",
    "SATURATION_COLUMN",
    "CurveMetadata",
    "CurveTable",
    "EnergyUnit",
    "PotentialSample",
    "QuantumNumbers",
    "Spin",
    "anisotropic_coulomb",
    "bohr_radius",
    "convert_energy",
    "coulomb_asymptote",
    "effective_potential_element",
    "effective_potential_lll",
    "emit_curve",
    "landau_energy",
    "lll_origin_factor",
    "magnetic_length",
    "mc2_to_rydberg",
    "on_orbit_potential",
    "radial_density",
    "radial_function",
    "rydberg_to_mc2",
    "saturation_potential",
    "xi_from_zeta",
    "zeta_from_xi",
]
