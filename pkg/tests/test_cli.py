"""
Tests for the command-line front end and orchestrator
"""
import json
import logging

import pytest

from config.presets import PRESET_WINDOWS
from config.run_config import load_run_config
from src.cli import Command, CommandClassifier, ExitCode, RunOrchestrator
from src.cli.main import main
from src.utils import read_frame


@pytest.fixture(autouse=True)
def drop_cli_handlers():
    """main() installs root handlers on captured streams; remove them afterwards"""
    yield
    root = logging.getLogger()
    for handler in [h for h in root.handlers if getattr(h, "_bullwhip_handler", False)]:
        root.removeHandler(handler)
        handler.close()


def test_classifier():
    """Subcommand names map onto commands"""
    assert CommandClassifier.classify(" Sweep ") == Command.SWEEP
    with pytest.raises(ValueError):
        CommandClassifier.classify("plot")


def test_analytic_iid_value(capsys):
    """Defaults evaluate the base scenario"""
    assert main(["analytic"]) == ExitCode.OK
    out = capsys.readouterr().out
    assert "BM = 328.500000" in out
    assert "iid: 328.500000" in out


def test_analytic_constant_leadtime(capsys):
    """sigma_L = 0, L = 2, n = 4 gives 2.5"""
    assert main(["analytic", "--mu-l", "2", "--sigma-l", "0", "--n", "4"]) == ExitCode.OK
    assert "BM = 2.500000" in capsys.readouterr().out


def test_analytic_rejects_unit_rho(capsys):
    """rho = 1 exits with a domain error pointing at --limit"""
    assert main(["analytic", "--rho", "1.0"]) == ExitCode.CONFIG_ERROR
    assert "--limit rho1" in capsys.readouterr().err


def test_analytic_limits(capsys):
    """--limit evaluates the boundary values"""
    assert main(["analytic", "--limit", "rho1"]) == ExitCode.OK
    assert "= 326.000000" in capsys.readouterr().out

    assert main(["analytic", "--preset", "fig4", "--limit", "rho-1"]) == ExitCode.OK
    assert "= 313.500000" in capsys.readouterr().out


def test_unknown_config_key_exits(tmp_path, capsys):
    """A config file with unknown keys exits with code 2"""
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"windows": 5}))
    assert main(["analytic", "--config", str(path)]) == ExitCode.CONFIG_ERROR
    assert "ConfigError" in capsys.readouterr().err


def test_bad_pmf_exits(capsys):
    """Malformed --pmf JSON exits with code 2"""
    assert main(["analytic", "--pmf", "{5: 0.5"]) == ExitCode.CONFIG_ERROR


def test_dump_config(tmp_path):
    """--dump-config writes a loadable configuration"""
    path = tmp_path / "resolved.json"
    assert main(["analytic", "--preset", "fig5", "--dump-config", str(path)]) == ExitCode.OK
    config = load_run_config(str(path))
    assert (config.n, config.m) == (15, 2)


def test_simulate_is_reproducible(tmp_path, capsys):
    """Same seed, byte-identical trace"""
    common = ["simulate", "--T", "10000", "--burn-in", "100", "--seed", "3"]
    first, second = tmp_path / "first.csv", tmp_path / "second.csv"

    assert main(common + ["--output", str(first)]) == ExitCode.OK
    assert main(common + ["--output", str(second)]) == ExitCode.OK

    assert first.read_bytes() == second.read_bytes()
    assert "BM estimate" in capsys.readouterr().out
    frame = read_frame(first)
    assert int(frame["measured"].sum()) == 10_000


def test_simulate_reports_tns(tmp_path, capsys):
    """Costs add an empirical TNS"""
    args = ["simulate", "--T", "10000", "--burn-in", "100", "--h", "1", "--b", "4",
            "--output", str(tmp_path / "trace.csv")]
    assert main(args) == ExitCode.OK
    assert "TNS:" in capsys.readouterr().out


def test_sweep_writes_curves(tmp_path):
    """fig3 sweep writes a curve file and the long-format file"""
    args = ["sweep", "--preset", "fig3", "--grid-points", "21", "--output-dir", str(tmp_path)]
    assert main(args) == ExitCode.OK

    curve = read_frame(tmp_path / "curve_fig3.csv")
    assert len(curve) == 21
    assert (tmp_path / "curves_long.csv").exists()


def test_validate_failure_exit_code(tmp_path):
    """A failing validation exits with code 1"""
    args = ["validate", "--preset", "fig3", "--rho-grid", "0,0.5", "--T", "10000",
            "--replications", "2", "--z-threshold", "1e-9", "--output-dir", str(tmp_path)]
    assert main(args) == ExitCode.VALIDATION_FAILED
    assert len(read_frame(tmp_path / "validation.csv")) == 2


def test_validate_all_scenario_preset_covers_every_window(tmp_path):
    """--preset paper validates all eight scenarios and records each row"""
    args = ["validate", "--preset", "paper", "--rho-grid", "0", "--T", "10000", "--replications", "2",
            "--z-threshold", "1e9", "--max-rel-error", "10", "--output-dir", str(tmp_path)]
    assert main(args) == ExitCode.OK

    frame = read_frame(tmp_path / "validation.csv")
    assert len(frame) == 8
    assert sorted(zip(frame["n"], frame["m"])) == sorted(PRESET_WINDOWS.values())


def test_validate_all_alias_matches_all_scenario_preset(tmp_path):
    """--preset all is an alias of --preset paper"""
    args = ["validate", "--preset", "all", "--rho-grid", "0", "--T", "10000", "--replications", "2",
            "--z-threshold", "1e9", "--max-rel-error", "10", "--output-dir", str(tmp_path)]
    assert main(args) == ExitCode.OK
    assert len(read_frame(tmp_path / "validation.csv")) == 8


def test_validate_preset_applies_relative_error_bound(tmp_path):
    """Preset runs fail rows whose estimate misses the closed form by more than 3%"""
    args = ["validate", "--preset", "fig10", "--rho-grid", "0.9", "--T", "10000", "--replications", "2",
            "--z-threshold", "1e9", "--output-dir", str(tmp_path)]
    exit_code = main(args)

    row = read_frame(tmp_path / "validation.csv").iloc[0]
    assert bool(row["passed"]) == (row["mc_rel_error"] <= 0.03)
    assert (exit_code == ExitCode.OK) == bool(row["passed"])


@pytest.mark.slow
def test_validate_all_scenarios_passes(tmp_path, capsys):
    """Validation over every preset scenario passes with default run lengths"""
    assert main(["validate", "--preset", "paper", "--output-dir", str(tmp_path)]) == ExitCode.OK

    frame = read_frame(tmp_path / "validation.csv")
    assert len(frame) == 8 * 5
    assert frame["passed"].all()
    assert (frame["mc_rel_error"] < 0.03).all()


def test_extrema_command(capsys):
    """fig3 reports a minimum and a maximum"""
    assert main(["extrema", "--preset", "fig3"]) == ExitCode.OK
    out = capsys.readouterr().out
    assert "min at rho=" in out
    assert "max at rho=" in out


def test_orchestrator_extrema_values():
    """fig3 extrema sit near -0.5 and 0.7"""
    outcome = RunOrchestrator().run(Command.EXTREMA, load_run_config(overrides={"preset": "fig3"}))
    assert outcome["success"]
    points = outcome["result"]["data"]["scenarios"][0]["points"]
    kinds = {p["kind"]: p["rho"] for p in points}
    assert kinds["min"] == pytest.approx(-0.5, abs=0.1)
    assert kinds["max"] == pytest.approx(0.7, abs=0.1)


def test_orchestrator_error_envelope():
    """Domain errors come back as a failed envelope"""
    outcome = RunOrchestrator().run(Command.SIMULATE, load_run_config(overrides={"rho": -1.0}))
    assert not outcome["success"]
    assert outcome["error"] == "DomainError"
    assert outcome["exit_code"] == ExitCode.CONFIG_ERROR
