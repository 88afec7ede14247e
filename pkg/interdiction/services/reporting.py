"""Tabular and text renderings of experiment reports."""

import logging
from collections.abc import Iterable
from pathlib import Path as FilePath

import pandas as pd

from interdiction.models.experiment import ExperimentReport, RunRecord

logger = logging.getLogger(__name__)

RUNS_FILE = "runs.csv"
SUMMARY_FILE = "summary.txt"


def fmt_probability(value: float) -> str:
    return f"{value:.6f}"


def fmt_time(value: float) -> str:
    return f"{value:.4f}"


def write_csv(frame: pd.DataFrame, target: FilePath) -> FilePath:
    """Write a frame with a fixed line terminator so reruns are byte-identical."""
    frame.to_csv(target, index=False, lineterminator="\n")
    logger.info(f"Wrote {len(frame)} row(s) to {target}")
    return target


def _params_columns(record: RunRecord) -> dict[str, str]:
    vendor, attacker = record.vendor_params, record.attacker_params
    if vendor is None or attacker is None:
        return dict.fromkeys(
            ("gamma_vendor", "gamma_attacker", "lambda_vendor", "lambda_attacker",
             "alpha_vendor", "beta_vendor", "alpha_attacker", "beta_attacker",
             "reference_vendor", "reference_attacker"),
            "",
        )  # fmt: skip
    return {
        "gamma_vendor": f"{vendor.gamma:g}",
        "gamma_attacker": f"{attacker.gamma:g}",
        "lambda_vendor": f"{vendor.loss_multiplier:g}",
        "lambda_attacker": f"{attacker.loss_multiplier:g}",
        "alpha_vendor": f"{vendor.alpha:g}",
        "beta_vendor": f"{vendor.beta:g}",
        "alpha_attacker": f"{attacker.alpha:g}",
        "beta_attacker": f"{attacker.beta:g}",
        "reference_vendor": fmt_time(vendor.reference),
        "reference_attacker": fmt_time(attacker.reference),
    }


def runs_frame(report: ExperimentReport, cgt_delivery_time: float | None = None) -> pd.DataFrame:
    """
    One row per record, in run order.

    Strategy columns are ``y_<h>`` for paths numbered from 1 in canonical
    order and ``x_<node id>`` for danger points.

    Args:
        report: The report to tabulate
        cgt_delivery_time: Saddle-point delivery time to compare against;
            taken from the report's EUT record when omitted
    """
    if cgt_delivery_time is None and report.eut_record is not None:
        cgt_delivery_time = report.eut_record.delivery_time

    rows = []
    for record in report.records:
        row = {
            "run": record.label,
            "mode": record.mode,
            "sweep_parameter": record.sweep_parameter or "",
            "sweep_value": "" if record.sweep_value is None else f"{record.sweep_value:g}",
            **_params_columns(record),
            "vendor_value": fmt_time(record.vendor_value),
            "attacker_value": fmt_time(record.attacker_value),
            "delivery_time": fmt_time(record.delivery_time),
            "cgt_delivery_time": "" if cgt_delivery_time is None else fmt_time(cgt_delivery_time),
            "exceeds_target": record.delivery_time > report.target_delivery_time,
            "exploitability": f"{record.exploitability:.3e}",
            "mu_primal": f"{record.mu_primal:.10g}",
            "mu_dual": f"{record.mu_dual:.10g}",
            "shortest_path_probability": fmt_probability(record.shortest_path_probability),
        }
        for h, p in enumerate(record.vendor_strategy.probabilities, start=1):
            row[f"y_{h}"] = fmt_probability(float(p))
        for node, p in zip(
            report.graph.node_ids, record.attacker_strategy.probabilities, strict=True
        ):
            row[f"x_{node}"] = fmt_probability(float(p))
        rows.append(row)
    return pd.DataFrame(rows)


def _support(probabilities: Iterable[float], names: Iterable[str]) -> str:
    pairs = zip(names, probabilities, strict=True)
    return ", ".join(f"{name}:{p:.4f}" for name, p in pairs if p > 0)


def summary_text(report: ExperimentReport) -> str:
    """Human-readable account of the paths and every record."""
    paths = report.paths
    shortest = report.shortest_path_index
    path_names = [f"{h + 1}({','.join(path.label)})" for h, path in enumerate(paths)]
    lines = [
        f"Graph: {len(report.graph.nodes)} danger points, {len(report.graph.edges)} edges, "
        f"{len(paths)} simple paths",
        f"Shortest path: {shortest + 1} {paths[shortest].nodes} "
        f"({fmt_time(paths[shortest].total_time)} min)",
        f"Target delivery time: {fmt_time(report.target_delivery_time)} min",
        "",
    ]
    for record in report.records:
        lines.append(f"[{record.label}]")
        if record.mode == "eut":
            lines.append(f"  game value T*: {fmt_time(record.vendor_value)}")
            lines.append(f"  mu_1={record.mu_primal:.10g} mu_2={record.mu_dual:.10g}")
        else:
            lines.append(f"  vendor security value: {record.vendor_value:.6g}")
            lines.append(f"  attacker security value: {record.attacker_value:.6g}")
        lines.append(f"  delivery time: {fmt_time(record.delivery_time)}")
        lines.append(
            f"  shortest-path probability: {fmt_probability(record.shortest_path_probability)}"
        )
        lines.append(f"  exploitability: {record.exploitability:.3e}")
        lines.append(
            f"  vendor support: {_support(record.vendor_strategy.probabilities, path_names)}"
        )
        lines.append(
            f"  attacker support: "
            f"{_support(record.attacker_strategy.probabilities, report.graph.node_ids)}"
        )
        lines.append("")
    return "\n".join(lines)


def write_report(report: ExperimentReport, output_dir: FilePath) -> list[FilePath]:
    """
    Write ``runs.csv`` and ``summary.txt`` into ``output_dir``.

    Files written before a failure are removed before the error propagates.
    """
    written: list[FilePath] = []
    try:
        runs = output_dir / RUNS_FILE
        written.append(runs)
        write_csv(runs_frame(report), runs)
        summary = output_dir / SUMMARY_FILE
        written.append(summary)
        summary.write_text(summary_text(report), encoding="utf-8")
        logger.info(f"Wrote summary to {summary}")
    except Exception:
        for partial in written:
            partial.unlink(missing_ok=True)
        logger.error(f"Report writing to {output_dir} failed; removed {len(written)} file(s)")
        raise
    return written
