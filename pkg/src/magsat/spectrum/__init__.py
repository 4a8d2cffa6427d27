# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Even-level spectrum of hydrogen-like atoms in a strong magnetic field.

Classes:
    SpectrumRequest: Field, m, Z, model and root count.
    SpectrumRoot: A root with its energies and residual.

Functions:
    kp_rhs: Right-hand side of the spectrum equation.
    kp_solve: Enumerate the deepest roots.
    saturation_solve: Deep root of the field-limited equation.
    log_derivative_short, log_derivative_long, log_derivative_mv:
        Logarithmic derivatives matched by the spectrum equation.
    energy_convert: ω to Rydberg, eV and Mc² energies.

Example:
    >>> from magsat.fields import field_from
    >>> from magsat.spectrum import SpectrumRequest, kp_solve
    >>> kp_solve(SpectrumRequest(field_from(1e5)))[0].omega > 1
    True
"""

from magsat.spectrum.kp import (
    MAX_CHARGE,
    POLE_GUARD_RELATIVE,
    RESIDUAL_TOL,
    SpectrumRequest,
    SpectrumRoot,
    energy_convert,
    kp_rhs,
    kp_solve,
    saturation_log_term,
    saturation_solve,
)
from magsat.spectrum.log_derivatives import (
    log_derivative_long,
    log_derivative_mv,
    log_derivative_short,
)

__all__ = [
    "MAX_CHARGE",
    "POLE_GUARD_RELATIVE",
    "RESIDUAL_TOL",
    "SpectrumRequest",
    "SpectrumRoot",
    "energy_convert",
    "kp_rhs",
    "kp_solve",
    "log_derivative_long",
    "log_derivative_mv",
    "log_derivative_short",
    "saturation_log_term",
    "saturation_solve",
]
