# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Magnetic-field scales, physical constants and vacuum permittivities.

Classes:
    PhysicalConstants: Immutable α, B_cr and Mc² with derived Rydberg and B_a.
    FieldStrength: A field carried as b, 𝓑 and gauss with a range flag.
    Permittivities: The pair (ε⊥, ε∥) tagged with its model.
    BasePermittivityModel: Template Method base for permittivity models.

Functions:
    field_from: Build a FieldStrength from any scale.
    permittivity: Evaluate (ε⊥, ε∥) under a registered model.
    resolve_constants: Merge flags, environment, config file and defaults.

Example:
    >>> from magsat.fields import field_from, permittivity
    >>> eps = permittivity(field_from(1e8), "full")
    >>> eps.eps_par > 5
    True
"""

from magsat.fields.base_model import BasePermittivityModel
from magsat.fields.config import read_config_file, resolve_constants
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants
from magsat.fields.field_strength import (
    WORKING_RANGE_B,
    FieldStrength,
    FieldUnit,
    RangeFlag,
    classify_range,
    field_from,
)
from magsat.fields.models import (
    AsymptoticPermittivityModel,
    FullPermittivityModel,
    UnityPermittivityModel,
    permittivity,
)
from magsat.fields.permittivity import Permittivities, PermittivityModel
from magsat.fields.registry import (
    create_model,
    get_model_for_name,
    get_supported_models,
    register_permittivity_model,
)

__all__ = [
    "DEFAULT_CONSTANTS",
    "WORKING_RANGE_B",
    "AsymptoticPermittivityModel",
    "BasePermittivityModel",
    "FieldStrength",
    "FieldUnit",
    "FullPermittivityModel",
    "Permittivities",
    "PermittivityModel",
    "PhysicalConstants",
    "RangeFlag",
    "UnityPermittivityModel",
    "classify_range",
    "create_model",
    "field_from",
    "get_model_for_name",
    "get_supported_models",
    "permittivity",
    "read_config_file",
    "register_permittivity_model",
    "resolve_constants",
]
