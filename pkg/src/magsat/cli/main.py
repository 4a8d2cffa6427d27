# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""The ``magsat`` command group.

Global options resolve the physical constants and select the energy unit and
output format; each subcommand wraps one library operation. Library errors
are translated into exit codes: 2 for bad input, 3 for solver failures and
4 for I/O errors.
"""

import functools
import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any, TypeVar

import click
from pydantic import BaseModel

from magsat import __version__
from magsat.cli.figures import SUPPORTED_FIGURES, build_figure, write_panels
from magsat.cli.output import (
    OutputFormat,
    build_manifest,
    render_csv,
    render_text,
    write_with_manifest,
)
from magsat.cli.schemas import (
    CurveReport,
    OracleReport,
    PermReport,
    RootRecord,
    SaturationRecord,
    SaturationReport,
    SpectrumReport,
)
from magsat.common.errors import ConfigError, ConvergenceError, DomainError
from magsat.fields.config import resolve_constants
from magsat.fields.constants import PhysicalConstants
from magsat.fields.field_strength import FieldStrength, FieldUnit, field_from
from magsat.fields.models import permittivity
from magsat.fields.permittivity import PermittivityModel
from magsat.oracle.potentials import SaturationPotential
from magsat.oracle.shooting import ShootingConfig, ShootingTarget, shoot_even_state
from magsat.potential.curves import COMPANION_ORDER, emit_curve
from magsat.potential.units import EnergyUnit
from magsat.spectrum.kp import MAX_CHARGE, SpectrumRequest, kp_solve, saturation_solve
from magsat.validity.diagnostics import validity_report

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Relative KP-vs-shooting difference accepted by the oracle subcommand
ORACLE_BAND: float = 0.05

# Exit codes
EXIT_USAGE: int = 2
EXIT_SOLVER: int = 3
EXIT_IO: int = 4

MODEL_CHOICES: list[str] = [m.value for m in PermittivityModel] + ["none"]


class CliExit(click.ClickException):
    """A ClickException carrying a specific exit code."""

    def __init__(self, message: str, exit_code: int) -> None:
        """Initialize with a message and the process exit code."""
        super().__init__(message)
        self.exit_code = exit_code


@dataclass(frozen=True)
class CliState:
    """Options shared by all subcommands."""

    constants: PhysicalConstants
    units: EnergyUnit
    out: OutputFormat


def handle_errors(func: F) -> F:
    """Translate library errors into CliExit with the matching exit code."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except (ConfigError, DomainError) as err:
            raise CliExit(str(err), EXIT_USAGE) from err
        except ConvergenceError as err:
            raise CliExit(f"Solver failure: {err}", EXIT_SOLVER) from err
        except OSError as err:
            where = err.filename if err.filename is not None else "output"
            message = f"I/O error on {where}: {err.strerror or err}"
            raise CliExit(message, EXIT_IO) from err

    return wrapper  # type: ignore[return-value]


def configure_logging(quiet: bool, verbose: bool) -> None:
    """Configure the root handler once and set the magsat log level."""
    level = logging.WARNING if quiet else logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger("magsat").setLevel(level)


# ----- Shared options -----


def field_options(func: F) -> F:
    """Add --B and --unit."""
    func = click.option(
        "--unit",
        type=click.Choice([u.value for u in FieldUnit]),
        default=FieldUnit.CAL_B.value,
        show_default=True,
        help="Scale of --B.",
    )(func)
    return click.option(
        "--B", "field_value", type=float, required=True, help="Field strength."
    )(func)


def atom_options(func: F) -> F:
    """Add --m, --Z and --model."""
    func = click.option(
        "--model",
        type=click.Choice(MODEL_CHOICES),
        default=PermittivityModel.FULL.value,
        show_default=True,
        help="Vacuum permittivity model; none is unity.",
    )(func)
    func = click.option(
        "--Z",
        "charge",
        type=click.IntRange(1, MAX_CHARGE),
        default=1,
        show_default=True,
        help="Nuclear charge.",
    )(func)
    return click.option("--m", type=int, default=0, show_default=True)(func)


def output_options(func: F) -> F:
    """Add --out and --save."""
    func = click.option(
        "--save",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="Also write the output to FILE with a manifest sidecar.",
    )(func)
    return click.option(
        "--out",
        type=click.Choice([f.value for f in OutputFormat]),
        default=None,
        help="Output format; defaults to the global --out.",
    )(func)


def parse_int_list(value: str, name: str) -> list[int]:
    """Parse "0,1,2" into integers."""
    try:
        return [int(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise click.BadParameter(
            f"expected comma-separated integers, got '{value}'", param_hint=name
        ) from None


def parse_float_list(value: str, name: str) -> list[float]:
    """Parse "1e5,1e9" into floats."""
    try:
        return [float(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise click.BadParameter(
            f"expected comma-separated numbers, got '{value}'", param_hint=name
        ) from None


def emit(
    state: CliState,
    command: str,
    out: str | None,
    save: Path | None,
    inputs: dict[str, Any],
    report: BaseModel,
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
) -> None:
    """Print the result in the chosen format and optionally save it."""
    fmt = OutputFormat(out) if out else state.out
    if fmt is OutputFormat.JSON:
        text = report.model_dump_json(indent=2) + "\n"
    elif fmt is OutputFormat.CSV:
        text = render_csv(columns, rows)
    else:
        text = render_text(columns, rows)
    click.echo(text, nl=False)
    if save is not None:
        manifest = build_manifest(command, state.constants, inputs)
        write_with_manifest(save, text, manifest)


def _field(state: CliState, value: float, unit: str) -> FieldStrength:
    return field_from(value, unit, state.constants)


def _atom_inputs(
    field_value: float, unit: str, m: int, charge: int, model: str, **extra: Any
) -> dict[str, Any]:
    inputs: dict[str, Any] = {"B": field_value, "unit": unit, "m": m, "Z": charge}
    return {**inputs, "model": model, **extra}


# ----- Command group -----


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="magsat")
@click.option("--alpha", type=float, default=None, help="Fine-structure constant.")
@click.option(
    "--bcr-gauss", type=float, default=None, help="Critical field B_cr in gauss."
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="key = value constants file.",
)
@click.option(
    "--units",
    type=click.Choice(["mc2", "ry", "rydberg"]),
    default="mc2",
    show_default=True,
    help="Energy unit of potential output.",
)
@click.option(
    "--out",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.TEXT.value,
    show_default=True,
    help="Default output format.",
)
@click.option("--quiet", "-q", is_flag=True, help="Only log warnings and errors.")
@click.option("--verbose", "-v", is_flag=True, help="Log debug messages.")
@click.pass_context
@handle_errors
def cli(
    ctx: click.Context,
    alpha: float | None,
    bcr_gauss: float | None,
    config_path: Path | None,
    units: str,
    out: str,
    quiet: bool,
    verbose: bool,
) -> None:
    """Hydrogen-like atoms in strong magnetic fields with vacuum polarization."""
    configure_logging(quiet, verbose)
    constants = resolve_constants(
        {"alpha": alpha, "b_cr_gauss": bcr_gauss}, config_path=config_path
    )
    logger.debug(f"Resolved constants: {constants.as_dict()}")
    ctx.obj = CliState(
        constants=constants, units=EnergyUnit.from_name(units), out=OutputFormat(out)
    )


@cli.command()
@field_options
@click.option(
    "--model",
    type=click.Choice(MODEL_CHOICES),
    default=PermittivityModel.FULL.value,
    show_default=True,
)
@output_options
@click.pass_obj
@handle_errors
def perm(
    state: CliState,
    field_value: float,
    unit: str,
    model: str,
    out: str | None,
    save: Path | None,
) -> None:
    """Vacuum permittivities ε⊥ and ε∥ at a field."""
    field = _field(state, field_value, unit)
    eps = permittivity(field, model, state.constants)
    report = PermReport.from_result(field, eps)
    row = list(report.model_dump().values())
    inputs = {"B": field_value, "unit": unit, "model": model}
    emit(state, "perm", out, save, inputs, report, list(PermReport.model_fields), [row])


@cli.command()
@field_options
@atom_options
@click.option("--zeta-max", type=float, default=1.0, show_default=True)
@click.option("--points", type=click.IntRange(1), default=201, show_default=True)
@click.option(
    "--companions",
    default="sat,novp",
    show_default=True,
    help=f"Comma-separated companion columns from {', '.join(COMPANION_ORDER)}.",
)
@output_options
@click.pass_obj
@handle_errors
def potential(
    state: CliState,
    field_value: float,
    unit: str,
    m: int,
    charge: int,
    model: str,
    zeta_max: float,
    points: int,
    companions: str,
    out: str | None,
    save: Path | None,
) -> None:
    """Tabulate the lowest-Landau-level effective potential."""
    if not zeta_max > 0:
        raise click.BadParameter("must be positive", param_hint="--zeta-max")
    keys = [key.strip() for key in companions.split(",") if key.strip()]
    grid = [zeta_max * i / (points - 1) for i in range(points)] if points > 1 else [0.0]
    table = emit_curve(
        _field(state, field_value, unit),
        m,
        charge,
        model,
        grid,
        state.constants,
        state.units,
        companions=keys,
    )
    report = CurveReport(**table.to_json_dict())
    inputs = {
        "B": field_value,
        "unit": unit,
        "m": m,
        "Z": charge,
        "model": model,
        "zeta_max": zeta_max,
        "points": points,
        "companions": keys,
        "units": state.units.value,
    }
    emit(state, "potential", out, save, inputs, report, report.columns, report.rows)


@cli.command()
@field_options
@atom_options
@click.option(
    "--K",
    "support",
    type=float,
    default=1.5,
    show_default=True,
    help="Support multiplier of the shallow-well sweep.",
)
@click.option(
    "--with-spectrum",
    is_flag=True,
    help="Solve for the deepest level and add the Landau ratio.",
)
@output_options
@click.pass_obj
@handle_errors
def validity(
    state: CliState,
    field_value: float,
    unit: str,
    m: int,
    charge: int,
    model: str,
    support: float,
    with_spectrum: bool,
    out: str | None,
    save: Path | None,
) -> None:
    """Applicability diagnostics. Always exits 0 whatever the verdict."""
    field = _field(state, field_value, unit)
    omega = None
    if with_spectrum:
        req = SpectrumRequest(field, m, charge, model, constants=state.constants)
        omega = kp_solve(req)[0].omega
    report = validity_report(
        field, m, charge, support, model, state.constants, omega=omega
    )
    rows = [[key, value] for key, value in report.model_dump(mode="json").items()]
    inputs = _atom_inputs(
        field_value, unit, m, charge, model, K=support, with_spectrum=with_spectrum
    )
    emit(state, "validity", out, save, inputs, report, ["quantity", "value"], rows)


@cli.command()
@field_options
@atom_options
@click.option("--roots", type=click.IntRange(1), default=1, show_default=True)
@output_options
@click.pass_obj
@handle_errors
def spectrum(
    state: CliState,
    field_value: float,
    unit: str,
    m: int,
    charge: int,
    model: str,
    roots: int,
    out: str | None,
    save: Path | None,
) -> None:
    """Deepest even levels from the spectrum equation."""
    req = SpectrumRequest(
        _field(state, field_value, unit), m, charge, model, roots, state.constants
    )
    records = [RootRecord.from_root(root) for root in kp_solve(req)]
    report = SpectrumReport(
        cal_b=req.field.cal_b,
        b=req.field.b,
        m=m,
        Z=charge,
        model=req.model.value,
        log_field=req.log_field,
        roots=records,
    )
    columns = ["nu", "omega", "kappa", "energy_ry", "energy_ev", "residual"]
    rows = [[getattr(r, name) for name in columns] for r in records]
    inputs = _atom_inputs(field_value, unit, m, charge, model, roots=roots)
    emit(state, "spectrum", out, save, inputs, report, columns, rows)


@cli.command()
@click.option(
    "--m", "m_values", default="0,1,2,3", show_default=True, help="Comma-separated |m|."
)
@click.option(
    "--Z", "charge", type=click.IntRange(1, MAX_CHARGE), default=1, show_default=True
)
@click.option(
    "--B",
    "cal_b",
    type=float,
    default=math.inf,
    show_default=True,
    help="Field in units of B_a; inf for the saturation limit.",
)
@output_options
@click.pass_obj
@handle_errors
def saturation(
    state: CliState,
    m_values: str,
    charge: int,
    cal_b: float,
    out: str | None,
    save: Path | None,
) -> None:
    """Saturation levels of the deepest state per m."""
    ms = parse_int_list(m_values, "--m")
    if not ms:
        raise click.BadParameter("at least one value is required", param_hint="--m")
    levels = []
    for m in ms:
        root = saturation_solve(m, charge, cal_b, state.constants)
        levels.append(
            SaturationRecord(
                m=m,
                omega=root.omega,
                energy_ry=root.energy_ry,
                energy_kev=root.energy_ev / 1000.0,
            )
        )
    report = SaturationReport(
        Z=charge, cal_b=None if math.isinf(cal_b) else cal_b, levels=levels
    )
    columns = ["m", "omega", "energy_ry", "energy_kev"]
    rows = [[getattr(level, name) for name in columns] for level in levels]
    inputs = {"m": ms, "Z": charge, "calB": None if math.isinf(cal_b) else cal_b}
    emit(state, "saturation", out, save, inputs, report, columns, rows)


@cli.command()
@field_options
@atom_options
@click.option(
    "--potential",
    "potential_name",
    type=click.Choice(["lll", "saturation"]),
    default="lll",
    show_default=True,
    help="Potential to shoot in.",
)
@click.option(
    "--nodes",
    type=click.IntRange(0, 1),
    default=0,
    show_default=True,
    help="Half-line nodes of the even state.",
)
@click.option(
    "--xi-max", type=float, default=None, help="Integration endpoint in Bohr radii."
)
@click.option("--step-tol", type=float, default=1e-10, show_default=True)
@output_options
@click.pass_obj
@handle_errors
def oracle(
    state: CliState,
    field_value: float,
    unit: str,
    m: int,
    charge: int,
    model: str,
    potential_name: str,
    nodes: int,
    xi_max: float | None,
    step_tol: float,
    out: str | None,
    save: Path | None,
) -> None:
    """Compare the spectrum equation with direct shooting."""
    cfg = ShootingConfig(xi_max=xi_max, step_tol=step_tol)
    req = SpectrumRequest(
        _field(state, field_value, unit), m, charge, model, nodes + 1, state.constants
    )
    target: ShootingTarget
    if potential_name == "saturation":
        if nodes:
            raise click.UsageError("--potential saturation supports --nodes 0 only")
        target = SaturationPotential(m, charge, state.constants)
        omega_kp = saturation_solve(m, charge, constants=state.constants).omega
        cal_b = None
    else:
        target = req
        omega_kp = kp_solve(req)[nodes].omega
        cal_b = req.field.cal_b
    shot = shoot_even_state(target, cfg, nodes)
    difference = abs(shot.omega - omega_kp) / omega_kp
    report = OracleReport(
        cal_b=cal_b,
        m=m,
        Z=charge,
        model=req.model.value,
        potential=potential_name,
        nodes=nodes,
        omega_kp=omega_kp,
        omega_shooting=shot.omega,
        relative_difference=difference,
        bracket_width=shot.residual,
        within_band=difference <= ORACLE_BAND,
    )
    if not report.within_band:
        logger.warning(
            f"Shooting and spectrum equation differ by {difference:.2%} "
            f"(band {ORACLE_BAND:.0%})"
        )
    columns = ["omega_kp", "omega_shooting", "relative_difference", "within_band"]
    rows = [[getattr(report, name) for name in columns]]
    inputs = _atom_inputs(
        field_value,
        unit,
        m,
        charge,
        model,
        potential=potential_name,
        nodes=nodes,
        xi_max=xi_max,
        step_tol=step_tol,
    )
    emit(state, "oracle", out, save, inputs, report, columns, rows)


@cli.command()
@click.option(
    "--which",
    type=click.IntRange(min(SUPPORTED_FIGURES), max(SUPPORTED_FIGURES)),
    required=True,
    help="Figure number.",
)
@click.option(
    "--out",
    "out_dir",
    type=click.Path(file_okay=False, path_type=Path),
    required=True,
    help="Directory for the CSV files.",
)
@click.option(
    "--fields", default=None, help="Comma-separated calB values (figures 2 to 4)."
)
@click.option(
    "--jobs",
    type=click.IntRange(1),
    default=1,
    show_default=True,
    help="Worker processes for the deepest-level grid.",
)
@click.pass_obj
@handle_errors
def figures(
    state: CliState, which: int, out_dir: Path, fields: str | None, jobs: int
) -> None:
    """Write the data behind one figure as CSV files with manifests."""
    values = parse_float_list(fields, "--fields") if fields else None
    panels = build_figure(which, state.constants, state.units, values, jobs)
    for path in write_panels(panels, out_dir, state.constants, which):
        click.echo(str(path))


def main() -> None:
    """Console-script entry point."""
    cli()
