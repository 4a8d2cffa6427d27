# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Named vacuum-screening models.

Each permittivity model (one-loop, large-field asymptote, no screening)
is a BasePermittivityModel subclass filed under a lower-case name. The
`permittivity()` entry point and the CLI `--model` option resolve names
here, so a further screening law only needs the decorator.

Functions:
    register_permittivity_model: Class decorator filing a model under a name.
    get_model_for_name: Model class for a name, or None.
    get_supported_models: Sorted names of the registered models.
    create_model: Instantiate the model for a name with given constants.
"""

import logging
from collections.abc import Callable
from typing import TypeVar

from magsat.common.errors import DomainError
from magsat.fields.base_model import BasePermittivityModel
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants

M = TypeVar("M", bound=BasePermittivityModel)

logger = logging.getLogger(__name__)

# Screening models by normalized name
_PERMITTIVITY_MODEL_REGISTRY: dict[str, type[BasePermittivityModel]] = {}


def _normalize(name: str) -> str:
    return str(name).strip().lower()


def register_permittivity_model(name: str) -> Callable[[type[M]], type[M]]:
    """File a screening model under a name.

    Names are compared case-insensitively with surrounding blanks removed,
    so "Full" and "full " refer to the same model.

    Args:
        name: Model name, e.g. "full" for the one-loop permittivities.

    Returns:
        A class decorator returning the class unchanged.

    Raises:
        ValueError: If the name is blank or already taken by another model.
        TypeError: If the class is not a BasePermittivityModel.

    Example:
        A constant dielectric, handy for tests::

            @register_permittivity_model("constant")
            class ConstantScreening(BasePermittivityModel):
                def get_model_name(self) -> str:
                    return "constant"

                def compute(self, field: FieldStrength) -> tuple[float, float]:
                    return 2.0, 2.0
    """
    key = _normalize(name)
    if not key:
        raise ValueError("Permittivity model name must not be blank")

    def decorator(cls: type[M]) -> type[M]:
        if not (isinstance(cls, type) and issubclass(cls, BasePermittivityModel)):
            raise TypeError(
                f"Screening model {getattr(cls, '__name__', cls)!s} "
                "must extend BasePermittivityModel"
            )

        taken = _PERMITTIVITY_MODEL_REGISTRY.get(key)
        if taken is not None:
            raise ValueError(
                f"Permittivity model name '{key}' is already registered by "
                f"{taken.__module__}.{taken.__name__}"
            )

        _PERMITTIVITY_MODEL_REGISTRY[key] = cls
        logger.debug(f"Screening model '{key}' -> {cls.__name__}")
        return cls

    return decorator


def get_model_for_name(name: str) -> type[BasePermittivityModel] | None:
    """Return the model class filed under a name, or None if there is none."""
    model_class = _PERMITTIVITY_MODEL_REGISTRY.get(_normalize(name))
    if model_class is None:
        logger.debug(
            f"No screening model '{name}'; "
            f"known: {', '.join(get_supported_models())}"
        )
    return model_class


def get_supported_models() -> list[str]:
    """Return the registered model names in sorted order.

    Example:
        >>> get_supported_models()
        ['asymptotic', 'full', 'unity']
    """
    return sorted(_PERMITTIVITY_MODEL_REGISTRY)


def create_model(
    name: str, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> BasePermittivityModel:
    """Instantiate the screening model filed under a name.

    Args:
        name: Registered model name.
        constants: Physical constants handed to the model.

    Returns:
        A model ready for `evaluate(field)`.

    Raises:
        DomainError: If no model is registered under the name.
    """
    model_class = get_model_for_name(name)
    if model_class is None:
        raise DomainError(
            f"Unknown permittivity model '{name}'. "
            f"Choose one of: {', '.join(get_supported_models())}"
        )
    return model_class(constants)
