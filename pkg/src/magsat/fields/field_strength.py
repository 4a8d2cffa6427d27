# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Magnetic-field scales and the working-range classification.

A field is carried in three equivalent scales: b = B/B_cr, 𝓑 = B/B_a
(stored as ``cal_b``) and gauss, related by b = α²𝓑. The working range
1 ≤ b < 1e5 is a validity statement for the screening model, so leaving it
only sets a flag and logs a warning.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from magsat.common.errors import DomainError
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants

logger = logging.getLogger(__name__)

# Working range of the screening model in units of B_cr (lower bound inclusive)
WORKING_RANGE_B: tuple[float, float] = (1.0, 1e5)


class FieldUnit(str, Enum):
    """Scale in which a field value is given."""

    B = "b"
    CAL_B = "calB"
    GAUSS = "gauss"


class RangeFlag(str, Enum):
    """Position of a field relative to the working range."""

    BELOW_RANGE = "below_range"
    IN_RANGE = "in_range"
    ABOVE_RANGE = "above_range"


@dataclass(frozen=True)
class FieldStrength:
    """A magnetic field expressed in all three scales.

    Attributes:
        b: Field in units of the critical field B_cr.
        cal_b: Field in units of the atomic field B_a = α²B_cr.
        gauss: Field in gauss.
        range_flag: Classification against WORKING_RANGE_B.
    """

    b: float
    cal_b: float
    gauss: float
    range_flag: RangeFlag


def classify_range(b: float) -> RangeFlag:
    """Classify a field b = B/B_cr against the working range.

    Args:
        b: Field in units of B_cr.

    Returns:
        The matching RangeFlag.
    """
    low, high = WORKING_RANGE_B
    if b < low:
        return RangeFlag.BELOW_RANGE
    if b >= high:
        return RangeFlag.ABOVE_RANGE
    return RangeFlag.IN_RANGE


def field_from(
    value: float,
    unit: FieldUnit | str = FieldUnit.CAL_B,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> FieldStrength:
    """Build a FieldStrength from a value in any supported scale.

    Args:
        value: Positive field value.
        unit: Scale of ``value``: "b", "calB" or "gauss".
        constants: Constants providing α and B_cr.

    Returns:
        A FieldStrength with all scales populated and the range flag set.

    Raises:
        DomainError: If value is not positive or the unit is unknown.

    Example:
        >>> field = field_from(1e8, "calB")
        >>> round(field.b)
        5325
    """
    if not value > 0:
        raise DomainError(f"Field value must be positive, got {value}")
    try:
        unit = FieldUnit(unit)
    except ValueError:
        supported = ", ".join(u.value for u in FieldUnit)
        raise DomainError(
            f"Unknown field unit '{unit}'. Supported units: {supported}"
        ) from None

    alpha_sq = constants.alpha**2
    if unit is FieldUnit.B:
        b = value
        cal_b = value / alpha_sq
        gauss = value * constants.b_cr_gauss
    elif unit is FieldUnit.CAL_B:
        b = alpha_sq * value
        cal_b = value
        gauss = b * constants.b_cr_gauss
    else:
        b = value / constants.b_cr_gauss
        cal_b = b / alpha_sq
        gauss = value

    flag = classify_range(b)
    if flag is not RangeFlag.IN_RANGE:
        low, high = WORKING_RANGE_B
        logger.warning(
            f"Field b={b:.6g} (calB={cal_b:.6g}) is {flag.value}; the screening "
            f"model is meant for {low:g} <= b < {high:g}"
        )
    return FieldStrength(b=b, cal_b=cal_b, gauss=gauss, range_flag=flag)
