# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Resolution of physical constants from flags, environment and config files.

Sources are consulted in this order, highest precedence first:

1. Explicit overrides (CLI flags such as ``--alpha``).
2. Environment variables ``MAGSAT_ALPHA``, ``MAGSAT_BCR_GAUSS`` and
   ``MAGSAT_ELECTRON_REST_ENERGY_EV``.
3. A ``key = value`` config file given explicitly or through ``MAGSAT_CONFIG``.
4. The CODATA defaults in magsat.fields.constants.

Expected config file format:
    # comment lines and blank lines are ignored
    alpha = 7.2973525693e-3
    b_cr_gauss = 4.41381e13
"""

import logging
import os
from pathlib import Path

from magsat.common.errors import ConfigError, DomainError
from magsat.fields.constants import DEFAULT_CONSTANTS, PhysicalConstants

logger = logging.getLogger(__name__)

# Environment variable naming the config file
CONFIG_PATH_ENV_VAR: str = "MAGSAT_CONFIG"

# Constant name -> environment variable overriding it
ENV_VARS: dict[str, str] = {
    "alpha": "MAGSAT_ALPHA",
    "b_cr_gauss": "MAGSAT_BCR_GAUSS",
    "electron_rest_energy_ev": "MAGSAT_ELECTRON_REST_ENERGY_EV",
}

# Keys accepted in a config file
CONFIG_KEYS: frozenset[str] = frozenset(ENV_VARS)


def read_config_file(path: Path) -> dict[str, float]:
    """Parse a ``key = value`` config file.

    Args:
        path: Path to a UTF-8 config file.

    Returns:
        Mapping of constant names to values.

    Raises:
        ConfigError: On a malformed line, an unknown key or a non-numeric value.
        OSError: If the file cannot be read.
    """
    values: dict[str, float] = {}
    text = path.read_text(encoding="utf-8")
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw_value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ConfigError(
                f"{path}:{line_number}: expected 'key = value', "
                f"got '{raw_line.strip()}'"
            )
        if key not in CONFIG_KEYS:
            raise ConfigError(
                f"{path}:{line_number}: unknown key '{key}'. "
                f"Allowed keys: {', '.join(sorted(CONFIG_KEYS))}"
            )
        try:
            values[key] = float(raw_value.strip())
        except ValueError:
            raise ConfigError(
                f"{path}:{line_number}: value for '{key}' is not a number: "
                f"'{raw_value.strip()}'"
            ) from None
    logger.debug(f"Read {len(values)} constant(s) from config file {path}")
    return values


def _environment_values() -> dict[str, float]:
    """Collect constants set through environment variables."""
    values: dict[str, float] = {}
    bad_vars: list[str] = []
    for key, env_var in ENV_VARS.items():
        raw_value = os.environ.get(env_var)
        if raw_value is None or not raw_value.strip():
            continue
        try:
            values[key] = float(raw_value)
        except ValueError:
            bad_vars.append(f"{env_var}={raw_value!r}")

    if bad_vars:
        raise ConfigError(
            f"Non-numeric environment variables: {', '.join(bad_vars)}. "
            f"Please set them to floating-point values or unset them."
        )
    return values


def resolve_constants(
    overrides: dict[str, float | None] | None = None,
    config_path: Path | None = None,
) -> PhysicalConstants:
    """Resolve the physical constants from all configuration sources.

    Args:
        overrides: Explicit values, typically CLI flags; None entries are ignored.
        config_path: Config file; falls back to the MAGSAT_CONFIG variable.

    Returns:
        The validated PhysicalConstants.

    Raises:
        ConfigError: If any source is malformed or the merged values are
            outside their admissible ranges.
        OSError: If the config file cannot be read.

    Example:
        >>> round(resolve_constants({"alpha": 1 / 137.0}).alpha, 6)
        0.007299
    """
    merged: dict[str, float] = {}

    if config_path is None:
        env_path = os.environ.get(CONFIG_PATH_ENV_VAR)
        if env_path:
            config_path = Path(env_path)
    if config_path is not None:
        merged.update(read_config_file(config_path))

    merged.update(_environment_values())

    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key not in CONFIG_KEYS:
            raise ConfigError(
                f"Unknown constant override '{key}'. "
                f"Allowed keys: {', '.join(sorted(CONFIG_KEYS))}"
            )
        merged[key] = value

    if not merged:
        return DEFAULT_CONSTANTS

    try:
        constants = DEFAULT_CONSTANTS.with_overrides(**merged)
    except DomainError as err:
        raise ConfigError(f"Invalid constants configuration: {err}") from err

    logger.debug(f"Resolved constants: {constants.as_dict()}")
    return constants
