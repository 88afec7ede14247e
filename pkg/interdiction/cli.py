"""
Command-line surface.

Usage:
    interdiction solve --mode both --gamma 0.1
    interdiction sweep --parameter lambda_vendor --values 1 2 3 4 5
    interdiction paths --graph drone.json
    interdiction figures --out results/paper

Settings resolve in three layers: ExperimentConfig defaults, then a
``--config`` file (YAML or JSON), then command-line flags.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path as FilePath
from typing import Any

import yaml
from pydantic import ValidationError

from interdiction import __version__
from interdiction.config import LOG_LEVEL
from interdiction.models.experiment import ExperimentReport
from interdiction.schemas.experiment import ExperimentConfig
from interdiction.services.experiments import (
    ExperimentConfigError,
    load_graph,
    run,
    run_paper_figures,
)
from interdiction.services.figures import (
    FIGURES,
    MissingRunError,
    emit_all_figures,
    emit_figure_data,
)
from interdiction.services.graph import GraphValidationError
from interdiction.services.reporting import fmt_time, summary_text, write_report
from interdiction.services.simplex import LpError
from interdiction.services.solver import SolverError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SOLVER_FAILURE = 1
EXIT_INVALID_INPUT = 2

# Flags that set one field on one or both players.
_PLAYER_FLAGS: dict[str, tuple[tuple[str, ...], str]] = {
    "gamma": (("vendor", "attacker"), "gamma"),
    "gamma_u": (("vendor",), "gamma"),
    "gamma_a": (("attacker",), "gamma"),
    "lambda_u": (("vendor",), "lambda"),
    "lambda_a": (("attacker",), "lambda"),
    "alpha": (("vendor", "attacker"), "alpha"),
    "beta": (("vendor", "attacker"), "beta"),
    "ref": (("vendor", "attacker"), "reference"),
}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=FilePath, help="YAML or JSON experiment config")
    parser.add_argument("--graph", help="Graph JSON document or builtin:paper")
    parser.add_argument("--out", type=FilePath, help="Output directory")
    parser.add_argument("--workers", type=int, help="Sweep worker processes (0 runs inline)")
    parser.add_argument(
        "--log-level", default=LOG_LEVEL, help="Logging level (default: %(default)s)"
    )

    prospect = parser.add_argument_group("prospect parameters")
    prospect.add_argument("--gamma", type=float, help="Rationality of both players")
    prospect.add_argument("--gamma-u", type=float, help="Vendor rationality")
    prospect.add_argument("--gamma-a", type=float, help="Attacker rationality")
    prospect.add_argument("--lambda-u", type=float, help="Vendor loss multiplier")
    prospect.add_argument("--lambda-a", type=float, help="Attacker loss multiplier")
    prospect.add_argument("--alpha", type=float, help="Gain exponent of both players")
    prospect.add_argument("--beta", type=float, help="Loss exponent of both players")
    prospect.add_argument("--ref", type=float, help="Reference delivery time of both players")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interdiction",
        description="Drone-delivery interdiction games under expected utility and prospect theory",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Solve one parameter point")
    _add_common(solve)
    solve.add_argument("--mode", choices=["eut", "pt", "both"], help="Games to solve")

    sweep = commands.add_parser("sweep", help="Sweep one prospect parameter")
    _add_common(sweep)
    sweep.add_argument("--mode", choices=["pt", "both"], help="Games to solve")
    sweep.add_argument(
        "--parameter",
        choices=[
            "gamma",
            "gamma_vendor",
            "gamma_attacker",
            "lambda_vendor",
            "lambda_attacker",
            "reference",
        ],
        help="Parameter to sweep",
    )
    sweep.add_argument("--values", type=float, nargs="+", help="Sweep grid")

    paths = commands.add_parser("paths", help="Enumerate the simple delivery paths")
    _add_common(paths)

    figures = commands.add_parser("figures", help="Emit the published figure data")
    _add_common(figures)
    figures.add_argument("--figure", choices=FIGURES, help="Emit a single figure")

    return parser


def _load_config_file(path: FilePath) -> dict[str, Any]:
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ExperimentConfigError(f"Cannot read config {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ExperimentConfigError(f"Config {path} is not valid YAML or JSON: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ExperimentConfigError(f"Config {path} must be a mapping at the top level")
    return data


def _set_player_field(player: dict[str, Any], key: str, value: float) -> None:
    if key == "lambda":
        player.pop("loss_multiplier", None)
    player[key] = value


def resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    """
    Merge config file values and flags into a validated ExperimentConfig.

    Raises:
        ExperimentConfigError: If the config file cannot be read
        ValidationError: If the merged settings are invalid
    """
    data: dict[str, Any] = _load_config_file(args.config) if args.config else {}
    for player in ("vendor", "attacker"):
        data[player] = dict(data.get(player) or {})

    if args.graph is not None:
        data["graph"] = args.graph
    if args.out is not None:
        data["output_dir"] = args.out
    if args.workers is not None:
        data["workers"] = args.workers
    if getattr(args, "mode", None) is not None:
        data["mode"] = args.mode

    for flag, (players, key) in _PLAYER_FLAGS.items():
        value = getattr(args, flag)
        if value is None:
            continue
        for player in players:
            _set_player_field(data[player], key, value)

    if args.command == "sweep":
        sweep = dict(data.get("sweep") or {})
        if args.parameter is not None:
            sweep["parameter"] = args.parameter
        if args.values is not None:
            sweep["values"] = args.values
        data["sweep"] = sweep
        data.setdefault("mode", "pt")
    elif args.command == "solve":
        data["sweep"] = None

    return ExperimentConfig.model_validate(data)


def _cmd_solve(config: ExperimentConfig) -> None:
    report = run(config)
    print(summary_text(report))


def _cmd_paths(config: ExperimentConfig, output_dir: FilePath | None) -> None:
    graph, paths = load_graph(config.graph)
    for h, path in enumerate(paths, start=1):
        print(f"{h:>4}  {'-'.join(path.nodes):<40} {fmt_time(path.total_time)}")
    if output_dir is not None:
        report = ExperimentReport(
            graph=graph,
            paths=tuple(paths),
            records=(),
            target_delivery_time=config.vendor.reference,
        )
        emit_figure_data(report, "3a", output_dir)


def _cmd_figures(config: ExperimentConfig, figure: str | None) -> None:
    config.output_dir.mkdir(parents=True, exist_ok=True)
    report = run_paper_figures(config)
    if figure is None:
        written = emit_all_figures(report, config.output_dir)
    else:
        written = [emit_figure_data(report, figure, config.output_dir)]
    try:
        write_report(report, config.output_dir)
    except Exception:
        for partial in written:
            partial.unlink(missing_ok=True)
        logger.error(f"Removed {len(written)} figure file(s) after the report failed")
        raise
    print(f"Figure data written to {config.output_dir}")


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        config = resolve_config(args)
        match args.command:
            case "solve" | "sweep":
                _cmd_solve(config)
            case "paths":
                _cmd_paths(config, args.out)
            case "figures":
                _cmd_figures(config, args.figure)
    except (ValidationError, ExperimentConfigError, GraphValidationError, MissingRunError) as e:
        logger.error(f"Invalid input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (SolverError, LpError, OSError) as e:
        logger.error(f"Run failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SOLVER_FAILURE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
