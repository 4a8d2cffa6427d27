# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Command-line interface.

Subcommands: perm, potential, validity, spectrum, saturation, oracle and
figures. ``magsat --help`` lists the global options.
"""

from magsat.cli.figures import FigurePanel, build_figure, write_panels
from magsat.cli.main import cli, main
from magsat.cli.output import OutputFormat, RunManifest

__all__ = [
    "FigurePanel",
    "OutputFormat",
    "RunManifest",
    "build_figure",
    "cli",
    "main",
    "write_panels",
]
