"""
Command-line front end: analytic | simulate | sweep | validate | extrema
"""
import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from config.presets import PRESET_NAMES
from config.run_config import dump_run_config, load_run_config
from config.settings import log_file, log_level
from src.cli.commands import CommandClassifier, ExitCode
from src.cli.orchestrator import RunOrchestrator
from src.models import ConfigError
from src.utils.logger import setup_logging

logger = logging.getLogger(__name__)


def _float_list(text: str) -> List[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'")


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON run configuration; flags override its values")
    parser.add_argument("--preset", choices=PRESET_NAMES, help="numerical scenario preset")
    parser.add_argument("--dump-config", help="write the resolved configuration to this path")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")

    demand = parser.add_argument_group("demand")
    demand.add_argument("--mu-d", dest="mu_D", type=float)
    demand.add_argument("--sigma-d", dest="sigma_D", type=float, help="stationary demand standard deviation")
    demand.add_argument("--rho", type=float, help="AR(1) coefficient in (-1, 1)")

    lead = parser.add_argument_group("lead times")
    lead.add_argument("--mu-l", dest="mu_L", type=float)
    lead.add_argument("--sigma-l", dest="sigma_L", type=float)
    lead.add_argument("--pmf", dest="leadtime_pmf", help='explicit pmf as JSON, e.g. \'{"5": 0.5, "15": 0.5}\'')
    lead.add_argument("--l-plus", dest="L_plus", type=int, help="maximum lead time when the pmf ends in zeros")

    windows = parser.add_argument_group("forecasting")
    windows.add_argument("--n", type=int, help="demand moving-average window")
    windows.add_argument("--m", type=int, help="lead-time moving-average window")

    mc = parser.add_argument_group("simulation")
    mc.add_argument("--T", dest="T", type=int, help="measured periods per replication")
    mc.add_argument("--replications", type=int)
    mc.add_argument("--workers", type=int)
    mc.add_argument("--burn-in", dest="burn_in", type=int)
    mc.add_argument("--seed", type=int, help="master seed (default: BULLWHIP_SEED)")

    out = parser.add_argument_group("output")
    out.add_argument("--output", help="CSV output path")
    out.add_argument("--output-dir", dest="output_dir")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bullwhip",
        description="Bullwhip measure for AR(1) demand with forecasted stochastic lead times"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    analytic = subparsers.add_parser("analytic", help="closed-form BM with special cases")
    _add_common_arguments(analytic)
    analytic.add_argument("--limit", choices=["rho1", "rho-1"], help="evaluate a rho -> +-1 limit")

    simulate = subparsers.add_parser("simulate", help="one seeded order-up-to run with trace CSV")
    _add_common_arguments(simulate)
    simulate.add_argument("--h", type=float, help="unit holding cost; with --b reports an empirical TNS")
    simulate.add_argument("--b", type=float, help="unit backlog cost")

    sweep = subparsers.add_parser("sweep", help="BM curves over rho")
    _add_common_arguments(sweep)
    sweep.add_argument("--grid-points", dest="grid_points", type=int)
    sweep.add_argument("--rho-grid", dest="rho_grid", type=_float_list, help="comma-separated rho values")
    sweep.add_argument("--mc", dest="monte_carlo", action="store_true", default=None, help="add Monte Carlo estimates")
    sweep.add_argument(
        "--hold-sigma-eps", dest="hold_sigma_eps", action="store_true",
        help="read --sigma-d as the innovation standard deviation and hold it across rho"
    )

    validate = subparsers.add_parser("validate", help="closed form vs appendix vs Monte Carlo")
    _add_common_arguments(validate)
    validate.add_argument("--rho-grid", dest="rho_grid", type=_float_list)
    validate.add_argument("--z-threshold", dest="z_threshold", type=float)
    validate.add_argument("--max-rel-error", dest="max_mc_rel_error", type=float)

    extrema = subparsers.add_parser("extrema", help="stationary points of BM in rho")
    _add_common_arguments(extrema)
    extrema.add_argument("--region", nargs=2, type=float, metavar=("LO", "HI"))

    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    values = dict(vars(args))
    for key in ("command", "config", "dump_config", "log_level"):
        values.pop(key, None)

    if values.pop("hold_sigma_eps", False):
        values["hold_sigma_D_constant"] = False
    if values.get("leadtime_pmf") is not None:
        try:
            values["leadtime_pmf"] = json.loads(values["leadtime_pmf"])
        except json.JSONDecodeError as e:
            raise ConfigError(f"--pmf is not valid JSON: {e}") from e
    if values.get("region") is not None:
        values["region"] = tuple(values["region"])
    return values


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level or log_level(), log_file())

    command = CommandClassifier.classify(args.command)
    try:
        config = load_run_config(args.config, _overrides(args))
    except ConfigError as e:
        print(f"Error (ConfigError): {e}", file=sys.stderr)
        return ExitCode.CONFIG_ERROR

    if args.dump_config:
        dump_run_config(config, args.dump_config)

    outcome = RunOrchestrator().run(command, config)
    stream = sys.stdout if outcome["success"] else sys.stderr
    print(outcome["report"], file=stream)
    return outcome["exit_code"]


if __name__ == "__main__":
    sys.exit(main())
