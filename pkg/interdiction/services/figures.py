"""
Figure data emission.

Each figure is a CSV with a header row and stable column names; plotting is
left to external tooling.  Probabilities carry 6 decimals and times 4.
"""

import logging
import math
from collections.abc import Sequence
from pathlib import Path as FilePath
from typing import Literal, get_args

import pandas as pd

from interdiction.models.experiment import ExperimentReport, RunRecord
from interdiction.services.experiments import PAPER_GAMMA_GRID, PAPER_LAMBDA_GRID
from interdiction.services.prospect import perceived_probabilities
from interdiction.services.reporting import fmt_probability, fmt_time, write_csv

logger = logging.getLogger(__name__)

Figure = Literal["3a", "3b", "4a", "4b", "5", "6"]
FIGURES: tuple[str, ...] = get_args(Figure)


class MissingRunError(Exception):
    """The report lacks a run a figure needs."""

    pass


def _column(parameter: str, value: float) -> str:
    return f"{parameter}={value:g}"


def _find_run(report: ExperimentReport, parameter: str, value: float) -> RunRecord:
    for record in report.sweep_records(parameter):
        if record.sweep_value is not None and math.isclose(record.sweep_value, value):
            return record
    raise MissingRunError(f"Report has no PT run for {_column(parameter, value)}")


def _cgt_run(report: ExperimentReport) -> RunRecord:
    record = report.eut_record
    if record is None:
        raise MissingRunError("Report has no CGT (eut) run")
    return record


def path_lengths(report: ExperimentReport) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "path": range(1, len(report.paths) + 1),
            "route": ["-".join(path.nodes) for path in report.paths],
            "total_time": [fmt_time(path.total_time) for path in report.paths],
        }
    )


def vendor_strategies(report: ExperimentReport, gammas: Sequence[float]) -> pd.DataFrame:
    """Path-selection probability per path under CGT and at each gamma."""
    frame = pd.DataFrame({"path": range(1, len(report.paths) + 1)})
    frame["cgt"] = [fmt_probability(p) for p in _cgt_run(report).vendor_strategy.probabilities]
    for gamma in gammas:
        record = _find_run(report, "gamma", gamma)
        frame[_column("gamma", gamma)] = [
            fmt_probability(p) for p in record.vendor_strategy.probabilities
        ]
    return frame


def probability_perception(report: ExperimentReport, gammas: Sequence[float]) -> pd.DataFrame:
    """
    Objective p_n against perceived w(p_n) per gamma.

    A ``gamma=1`` column is always present; it reproduces ``p``.
    """
    probabilities = report.graph.probabilities
    frame = pd.DataFrame(
        {
            "node": report.graph.node_ids,
            "p": [fmt_probability(p) for p in probabilities],
        }
    )
    for gamma in sorted({1.0, *gammas}):
        weights = perceived_probabilities(probabilities, gamma)
        frame[_column("gamma", gamma)] = [fmt_probability(w) for w in weights]
    return frame


def attacker_strategies(report: ExperimentReport, gammas: Sequence[float]) -> pd.DataFrame:
    """Attack probability per danger point under CGT and at each gamma."""
    frame = pd.DataFrame({"node": report.graph.node_ids})
    frame["cgt"] = [fmt_probability(p) for p in _cgt_run(report).attacker_strategy.probabilities]
    for gamma in gammas:
        record = _find_run(report, "gamma", gamma)
        frame[_column("gamma", gamma)] = [
            fmt_probability(p) for p in record.attacker_strategy.probabilities
        ]
    return frame


def delivery_vs_gamma(report: ExperimentReport, gammas: Sequence[float]) -> pd.DataFrame:
    cgt = _cgt_run(report).delivery_time
    rows = [
        {
            "gamma": f"{gamma:g}",
            "delivery_time": fmt_time(_find_run(report, "gamma", gamma).delivery_time),
            "cgt_delivery_time": fmt_time(cgt),
            "target_delivery_time": fmt_time(report.target_delivery_time),
        }
        for gamma in gammas
    ]
    return pd.DataFrame(rows)


def loss_aversion(report: ExperimentReport, lambdas: Sequence[float]) -> pd.DataFrame:
    cgt = _cgt_run(report).delivery_time
    rows = []
    for value in lambdas:
        record = _find_run(report, "lambda_vendor", value)
        rows.append(
            {
                "lambda_vendor": f"{value:g}",
                "shortest_path_probability": fmt_probability(record.shortest_path_probability),
                "delivery_time": fmt_time(record.delivery_time),
                "cgt_delivery_time": fmt_time(cgt),
                "target_delivery_time": fmt_time(report.target_delivery_time),
            }
        )
    return pd.DataFrame(rows)


def figure_frame(
    report: ExperimentReport, figure: str, *, sweep_values: Sequence[float] | None = None
) -> pd.DataFrame:
    """
    Tabulate one figure from a report.

    Args:
        report: Report holding the runs the figure needs
        figure: One of ``FIGURES``
        sweep_values: Gamma values (figures 3b to 5) or vendor loss
            multipliers (figure 6); the published grids when omitted

    Raises:
        MissingRunError: If a needed run is absent, naming the sweep point
        ValueError: If ``figure`` is unknown
    """
    match figure:
        case "3a":
            return path_lengths(report)
        case "3b":
            return vendor_strategies(report, sweep_values or PAPER_GAMMA_GRID)
        case "4a":
            return probability_perception(report, sweep_values or PAPER_GAMMA_GRID)
        case "4b":
            return attacker_strategies(report, sweep_values or PAPER_GAMMA_GRID)
        case "5":
            return delivery_vs_gamma(report, sweep_values or PAPER_GAMMA_GRID)
        case "6":
            return loss_aversion(report, sweep_values or PAPER_LAMBDA_GRID)
    raise ValueError(f"Unknown figure {figure!r}; expected one of {', '.join(FIGURES)}")


def emit_figure_data(
    report: ExperimentReport,
    figure: str,
    output_dir: FilePath,
    *,
    sweep_values: Sequence[float] | None = None,
) -> FilePath:
    """Write ``fig<figure>.csv`` into ``output_dir`` and return its path."""
    frame = figure_frame(report, figure, sweep_values=sweep_values)
    output_dir.mkdir(parents=True, exist_ok=True)
    return write_csv(frame, output_dir / f"fig{figure}.csv")


def emit_all_figures(report: ExperimentReport, output_dir: FilePath) -> list[FilePath]:
    """
    Write every figure CSV, or none.

    Frames are built before anything is written, so a missing run leaves
    the output directory untouched.
    """
    frames = {figure: figure_frame(report, figure) for figure in FIGURES}
    output_dir.mkdir(parents=True, exist_ok=True)
    written: list[FilePath] = []
    try:
        for figure, frame in frames.items():
            target = output_dir / f"fig{figure}.csv"
            written.append(target)
            write_csv(frame, target)
    except OSError:
        for partial in written:
            partial.unlink(missing_ok=True)
        raise
    logger.info(f"Emitted {len(written)} figure file(s) to {output_dir}")
    return written
