# SPDX-License-Identifier: MPL-2.0
# Copyright (c) 2025 magsat contributors

"""Unit tests for the magsat command group.

This module tests:
- Each subcommand in text, CSV and JSON form
- Global options for constants and units
- Exit codes for bad input, solver failures and I/O errors
- Saved outputs and their manifests
"""

import json
import logging
from collections.abc import Generator
from pathlib import Path
from typing import Any
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from magsat import __version__
from magsat.cli.main import EXIT_IO, EXIT_SOLVER, EXIT_USAGE, cli
from magsat.common.errors import ConvergenceError
from magsat.fields.config import CONFIG_PATH_ENV_VAR, ENV_VARS
from magsat.fields.constants import DEFAULT_CONSTANTS

SUBCOMMANDS = (
    "perm",
    "potential",
    "validity",
    "spectrum",
    "saturation",
    "oracle",
    "figures",
)


@pytest.fixture(autouse=True)  # type: ignore[untyped-decorator]
def isolated_cli(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """Clear magsat environment variables and restore the logger level."""
    for env_var in [*ENV_VARS.values(), CONFIG_PATH_ENV_VAR]:
        monkeypatch.delenv(env_var, raising=False)
    logger = logging.getLogger("magsat")
    level = logger.level

    yield

    logger.setLevel(level)


@pytest.fixture  # type: ignore[untyped-decorator]
def runner() -> CliRunner:
    """Provide a Click test runner."""
    return CliRunner()


def run_json(runner: CliRunner, *args: str) -> dict[str, Any]:
    """Invoke the CLI with JSON output and parse stdout."""
    result = runner.invoke(cli, ["--quiet", "--out", "json", *args])
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


class TestGroup:
    """Test the command group options."""

    def test_version(self, runner: CliRunner) -> None:
        """Test --version."""
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_help_lists_subcommands(self, runner: CliRunner) -> None:
        """Test that every subcommand is listed."""
        result = runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for name in SUBCOMMANDS:
            assert name in result.output

    def test_alpha_override(self, runner: CliRunner) -> None:
        """Test that --alpha changes the field conversion."""
        data = run_json(runner, "--alpha", str(1 / 137.0), "perm", "--B", "1e8")
        assert data["b"] == pytest.approx(1e8 / 137.0**2)

    def test_alpha_from_environment(
        self, runner: CliRunner, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """Test that MAGSAT_ALPHA reaches the CLI."""
        monkeypatch.setenv("MAGSAT_ALPHA", str(1 / 137.0))
        data = run_json(runner, "perm", "--B", "1e8")
        assert data["b"] == pytest.approx(1e8 / 137.0**2)

    def test_config_file(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test --config."""
        config = tmp_path / "magsat.conf"
        config.write_text("b_cr_gauss = 4.0e13\n", encoding="utf-8")
        data = run_json(runner, "--config", str(config), "perm", "--B", "1e8")
        assert data["gauss"] == pytest.approx(data["b"] * 4.0e13)

    def test_bad_config_is_usage_error(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test exit code 2 and the offending line for a bad config file."""
        config = tmp_path / "magsat.conf"
        config.write_text("alpha: 0.0073\n", encoding="utf-8")
        result = runner.invoke(cli, ["--config", str(config), "perm", "--B", "1e8"])
        assert result.exit_code == EXIT_USAGE
        assert f"{config}:1" in result.output

    def test_out_of_range_alpha(self, runner: CliRunner) -> None:
        """Test exit code 2 for an inadmissible constant."""
        result = runner.invoke(cli, ["--alpha", "0.5", "perm", "--B", "1e8"])
        assert result.exit_code == EXIT_USAGE
        assert "alpha" in result.output


class TestPerm:
    """Test the perm subcommand."""

    def test_json(self, runner: CliRunner) -> None:
        """Test the permittivities at calB = 1e8."""
        data = run_json(runner, "perm", "--B", "1e8")
        assert data["model"] == "full"
        assert data["range_flag"] == "in_range"
        assert data["eps_par"] == pytest.approx(5.1163, rel=1e-4)
        assert data["eps_perp"] == pytest.approx(0.99474, abs=2e-5)

    def test_unit_and_model(self, runner: CliRunner) -> None:
        """Test --unit b with the none alias."""
        data = run_json(runner, "perm", "--B", "10", "--unit", "b", "--model", "none")
        assert data["b"] == 10.0
        assert (data["eps_perp"], data["eps_par"]) == (1.0, 1.0)
        assert data["model"] == "unity"

    def test_csv(self, runner: CliRunner) -> None:
        """Test the CSV header."""
        result = runner.invoke(cli, ["--quiet", "perm", "--B", "1e8", "--out", "csv"])
        assert result.exit_code == 0
        header = result.stdout.splitlines()[0]
        assert header == "cal_b,b,gauss,range_flag,model,eps_perp,eps_par"

    def test_non_positive_field(self, runner: CliRunner) -> None:
        """Test exit code 2 for a non-positive field."""
        result = runner.invoke(cli, ["--quiet", "perm", "--B", "0"])
        assert result.exit_code == EXIT_USAGE
        assert "positive" in result.output


class TestPotential:
    """Test the potential subcommand."""

    def test_json(self, runner: CliRunner) -> None:
        """Test grid size, columns and the depth at the origin."""
        data = run_json(runner, "potential", "--B", "1e8", "--points", "11")
        assert data["columns"] == ["zeta", "U_mc2", "U_sat_mc2", "U_novp_mc2"]
        assert len(data["rows"]) == 11
        assert data["rows"][0][1] == pytest.approx(-0.295836, abs=2e-6)
        assert data["rows"][-1][0] == pytest.approx(1.0)

    def test_rydberg_and_coulomb(self, runner: CliRunner) -> None:
        """Test --units ry and an empty Coulomb cell at the origin."""
        data = run_json(
            runner,
            "--units",
            "ry",
            "potential",
            "--B",
            "1e8",
            "--points",
            "3",
            "--companions",
            "coul",
        )
        assert data["columns"] == ["zeta", "U_ry", "U_coul_ry"]
        assert data["rows"][0][2] is None
        assert data["metadata"]["units"] == "rydberg"

    def test_bad_zeta_max(self, runner: CliRunner) -> None:
        """Test exit code 2 for a non-positive --zeta-max."""
        result = runner.invoke(
            cli, ["--quiet", "potential", "--B", "1e8", "--zeta-max", "0"]
        )
        assert result.exit_code == EXIT_USAGE

    def test_unknown_companion(self, runner: CliRunner) -> None:
        """Test exit code 2 for an unknown companion column."""
        result = runner.invoke(
            cli, ["--quiet", "potential", "--B", "1e8", "--companions", "exact"]
        )
        assert result.exit_code == EXIT_USAGE
        assert "exact" in result.output


class TestValidity:
    """Test the validity subcommand."""

    def test_ok(self, runner: CliRunner) -> None:
        """Test an ok verdict at calB = 1e5."""
        data = run_json(runner, "validity", "--B", "1e5", "--m", "0", "--K", "1.5")
        assert data["verdict"] == "ok"
        assert data["landau_ratio"] is None

    def test_violated_still_exits_zero(self, runner: CliRunner) -> None:
        """Test a violated verdict at calB = 1e9, K = 3 with exit code 0."""
        data = run_json(runner, "validity", "--B", "1e9", "--m", "0", "--K", "3")
        assert data["verdict"] == "violated"

    def test_with_spectrum(self, runner: CliRunner) -> None:
        """Test that --with-spectrum adds the Landau ratio."""
        data = run_json(runner, "validity", "--B", "1e8", "--with-spectrum")
        assert 0 < data["landau_ratio"] < 1

    def test_text(self, runner: CliRunner) -> None:
        """Test the quantity/value table."""
        result = runner.invoke(cli, ["--quiet", "validity", "--B", "1e5"])
        assert result.exit_code == 0
        assert "verdict" in result.stdout
        assert "quantity" in result.stdout.splitlines()[0]


class TestSpectrum:
    """Test the spectrum subcommand."""

    def test_json(self, runner: CliRunner) -> None:
        """Test three roots ordered by ν."""
        data = run_json(runner, "spectrum", "--B", "1e9", "--roots", "3")
        assert [root["nu"] for root in data["roots"]] == [0, 1, 2]
        assert data["log_field"] == pytest.approx(20.7232658, rel=1e-8)
        omegas = [root["omega"] for root in data["roots"]]
        assert omegas == sorted(omegas, reverse=True)

    def test_csv_columns(self, runner: CliRunner) -> None:
        """Test the CSV header."""
        result = runner.invoke(
            cli, ["--quiet", "--out", "csv", "spectrum", "--B", "1e8", "--Z", "2"]
        )
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "nu,omega,kappa,energy_ry,energy_ev,residual"
        assert len(lines) == 2

    def test_charge_out_of_range(self, runner: CliRunner) -> None:
        """Test that --Z is limited to 1..10."""
        result = runner.invoke(cli, ["spectrum", "--B", "1e8", "--Z", "11"])
        assert result.exit_code == EXIT_USAGE

    def test_solver_failure(self, runner: CliRunner) -> None:
        """Test exit code 3 when the solver fails."""
        with patch(
            "magsat.cli.main.kp_solve",
            side_effect=ConvergenceError("residual too large"),
        ):
            result = runner.invoke(cli, ["--quiet", "spectrum", "--B", "1e8"])

        assert result.exit_code == EXIT_SOLVER
        assert "Solver failure: residual too large" in result.output


class TestSaturation:
    """Test the saturation subcommand."""

    def test_default_levels(self, runner: CliRunner) -> None:
        """Test the four saturation levels and the infinite field."""
        data = run_json(runner, "saturation")
        assert data["cal_b"] is None
        omegas = [level["omega"] for level in data["levels"]]
        expected = [11.213, 10.393, 9.987, 9.719]
        assert omegas == pytest.approx(expected, rel=5e-3)
        assert data["levels"][0]["energy_kev"] == pytest.approx(-1.7106, rel=5e-3)

    def test_finite_field(self, runner: CliRunner) -> None:
        """Test --B with a finite field."""
        data = run_json(runner, "saturation", "--m", "0", "--B", "1e9")
        assert data["cal_b"] == 1e9
        assert data["levels"][0]["omega"] < 11.213

    def test_bad_m_list(self, runner: CliRunner) -> None:
        """Test exit code 2 for a malformed --m list."""
        result = runner.invoke(cli, ["saturation", "--m", "0,one"])
        assert result.exit_code == EXIT_USAGE
        assert "comma-separated integers" in result.output


class TestOracle:
    """Test the oracle subcommand."""

    def test_saturation_nodes_rejected(self, runner: CliRunner) -> None:
        """Test that the saturation potential only supports the ground state."""
        result = runner.invoke(
            cli,
            [
                "--quiet",
                "oracle",
                "--B",
                "1e8",
                "--potential",
                "saturation",
                "--nodes",
                "1",
            ],
        )
        assert result.exit_code == EXIT_USAGE
        assert "--nodes 0" in result.output

    @pytest.mark.slow  # type: ignore[untyped-decorator]
    def test_within_band(self, runner: CliRunner) -> None:
        """Test agreement of shooting and the spectrum equation at calB = 1e8."""
        data = run_json(runner, "oracle", "--B", "1e8")
        assert data["within_band"] is True
        assert data["relative_difference"] <= 0.05
        assert data["potential"] == "lll"


class TestSave:
    """Test --save and the manifest sidecar."""

    def test_save_writes_manifest(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test the data file and manifest contents."""
        target = tmp_path / "out" / "perm.csv"
        result = runner.invoke(
            cli,
            ["--quiet", "perm", "--B", "1e8", "--out", "csv", "--save", str(target)],
        )
        assert result.exit_code == 0
        assert target.read_text(encoding="utf-8") == result.stdout

        manifest = json.loads((tmp_path / "out" / "perm.manifest.json").read_text())
        assert manifest["command"] == "perm"
        assert manifest["inputs"] == {"B": 1e8, "unit": "calB", "model": "full"}
        assert manifest["constants"]["alpha"] == DEFAULT_CONSTANTS.alpha
        assert manifest["version"] == __version__

    def test_unwritable_target(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test exit code 4 when the output cannot be written."""
        blocker = tmp_path / "file"
        blocker.write_text("", encoding="utf-8")
        result = runner.invoke(
            cli, ["--quiet", "perm", "--B", "1e8", "--save", str(blocker / "perm.txt")]
        )
        assert result.exit_code == EXIT_IO
        assert "I/O error" in result.output


class TestFigures:
    """Test the figures subcommand."""

    def test_figure_two(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that figure 2 writes both panels with manifests."""
        result = runner.invoke(
            cli, ["--quiet", "figures", "--which", "2", "--out", str(tmp_path)]
        )
        assert result.exit_code == 0, result.output
        assert (tmp_path / "fig2_kp_curves.csv").exists()
        assert (tmp_path / "fig2_kp_curves.manifest.json").exists()
        assert (tmp_path / "fig2_log_fields.csv").exists()
        assert str(tmp_path / "fig2_log_fields.csv") in result.stdout

    def test_figure_three_with_fields(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test --fields on the deepest-level panel."""
        result = runner.invoke(
            cli,
            [
                "--quiet",
                "figures",
                "--which",
                "3",
                "--out",
                str(tmp_path),
                "--fields",
                "1e5,1e9",
            ],
        )
        assert result.exit_code == 0, result.output
        lines = (tmp_path / "fig3_deepest_levels.csv").read_text().splitlines()
        assert len(lines) == 3
        assert lines[0].startswith("calB,E_ry_full_m0,")

    def test_unknown_figure(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that --which is limited to the supported figures."""
        result = runner.invoke(cli, ["figures", "--which", "7", "--out", str(tmp_path)])
        assert result.exit_code == EXIT_USAGE
