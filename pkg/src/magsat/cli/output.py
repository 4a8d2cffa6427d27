# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Output formatting and file emission for the CLI.

Numbers are written with ``repr(float)``, the shortest string that
round-trips, and files use ``\\n`` line endings so that identical inputs
give byte-identical data files. Every data file written to disk gets a
``<name>.manifest.json`` sidecar describing how it was produced.
"""

import csv
import io
import logging
import os
import tempfile
from collections.abc import Iterable, Sequence
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from magsat.fields.constants import PhysicalConstants

logger = logging.getLogger(__name__)

# Suffix of manifest sidecar files
MANIFEST_SUFFIX: str = ".manifest.json"


class OutputFormat(str, Enum):
    """Format of command output."""

    TEXT = "text"
    CSV = "csv"
    JSON = "json"


class RunManifest(BaseModel):
    """Provenance record written next to every data file."""

    model_config = ConfigDict(frozen=True)

    command: str = Field(..., description="Subcommand that produced the data")
    constants: dict[str, float] = Field(..., description="Resolved constants")
    inputs: dict[str, Any] = Field(default_factory=dict, description="Inputs")
    version: str = Field(..., description="magsat version")
    timestamp: str = Field(..., description="UTC time of the run, ISO 8601")


def build_manifest(
    command: str, constants: PhysicalConstants, inputs: dict[str, Any]
) -> RunManifest:
    """Create a manifest for a run."""
    from magsat import __version__

    return RunManifest(
        command=command,
        constants=constants.as_dict(),
        inputs=inputs,
        version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )


def format_number(value: Any) -> str:
    """Format a CSV cell: floats by repr, None as empty, others by str."""
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Render a header and rows as CSV text with ``\\n`` line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_number(value) for value in row])
    return buffer.getvalue()


def render_text(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Render a header and rows as an aligned plain-text table."""
    cells = [list(columns)] + [
        [format_number(value) for value in row] for row in rows
    ]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def atomic_write_text(path: Path, text: str) -> None:
    """Write text to path through a temporary file and a rename.

    Raises:
        OSError: If the directory is not writable.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise


def manifest_path(data_path: Path) -> Path:
    """Sidecar manifest path for a data file."""
    return data_path.with_name(data_path.stem + MANIFEST_SUFFIX)


def write_with_manifest(path: Path, text: str, manifest: RunManifest) -> Path:
    """Write a data file and its manifest sidecar atomically.

    Returns:
        The manifest path.
    """
    atomic_write_text(path, text)
    sidecar = manifest_path(path)
    atomic_write_text(sidecar, manifest.model_dump_json(indent=2) + "\n")
    logger.info(f"Wrote {path} and {sidecar.name}")
    return sidecar
