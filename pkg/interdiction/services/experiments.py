"""Experiment harness: EUT and PT solves, parameter sweeps and report files."""

import logging
import multiprocessing
import os
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path as FilePath

from interdiction.models.experiment import ExperimentReport, RunRecord
from interdiction.models.game import PayoffMatrix
from interdiction.models.graph import Path, SecurityGraph
from interdiction.schemas.experiment import ExperimentConfig, ProspectParams, SweepSpec
from interdiction.services.graph import enumerate_paths, incidence, parse_graph, shortest_paths
from interdiction.services.paper_instance import BUILTIN_PAPER, builtin_paper_instance
from interdiction.services.payoff import build_objective_matrix, build_pt_matrices
from interdiction.services.reporting import write_report
from interdiction.services.solver import security_level, solve_pt_security, solve_zero_sum

logger = logging.getLogger(__name__)

PAPER_GAMMA_GRID = [0.1, 0.5, 0.9]
PAPER_LAMBDA_GRID = [float(v) for v in range(1, 11)]

# Perception setting of the vendor loss-aversion grid: both players at
# gamma 0.3, vendor loss exponent 1.
PAPER_LOSS_AVERSION_GAMMA = 0.3
PAPER_LOSS_AVERSION_BETA = 1.0


class ExperimentConfigError(Exception):
    """Experiment configuration cannot be executed."""

    pass


def load_graph(source: str) -> tuple[SecurityGraph, list[Path]]:
    """
    Resolve a graph source to a graph and its canonical paths.

    Args:
        source: ``builtin:paper`` or a path to a graph JSON document

    Raises:
        ExperimentConfigError: If the graph has no origin-destination path
        GraphValidationError: If the document is invalid
    """
    if source == BUILTIN_PAPER:
        graph, paths = builtin_paper_instance()
    else:
        graph = parse_graph(FilePath(source))
        paths = enumerate_paths(graph)
    if not paths:
        raise ExperimentConfigError(f"Graph {source} has no origin-destination path")
    logger.info(f"Loaded graph {source}: {len(graph.nodes)} nodes, {len(paths)} paths")
    return graph, paths


def _shortest_index(paths: list[Path]) -> int:
    return shortest_paths(paths)[0]


def solve_eut(objective: PayoffMatrix, shortest: int) -> RunRecord:
    """Saddle point of the objective game."""
    solution = solve_zero_sum(objective)
    return RunRecord(
        mode="eut",
        vendor_strategy=solution.y,
        attacker_strategy=solution.x,
        vendor_value=solution.value_primal,
        attacker_value=solution.value_dual,
        delivery_time=security_level(objective, solution.y),
        exploitability=solution.exploitability,
        mu_primal=solution.mu_primal,
        mu_dual=solution.mu_dual,
        shortest_path_probability=float(solution.y.probabilities[shortest]),
    )


@dataclass(frozen=True)
class SweepTask:
    """Everything a worker needs to solve one PT point."""

    graph: SecurityGraph
    paths: tuple[Path, ...]
    objective: PayoffMatrix
    vendor: ProspectParams
    attacker: ProspectParams
    sweep_parameter: str | None
    sweep_value: float | None


def solve_pt_point(task: SweepTask) -> RunRecord:
    """
    Solve both players' security problems at one parameter point.

    Module-level so it pickles into a spawn-context worker process.  The
    achieved delivery time is the vendor strategy's worst case on the
    objective matrix, max_n (y^T M)_n: the route choice is subjective, the
    minutes it can cost are not.
    """
    paths = list(task.paths)
    L = incidence(task.graph, paths)
    m_vendor, m_attacker = build_pt_matrices(task.graph, paths, L, task.vendor, task.attacker)
    vendor, attacker = solve_pt_security(m_vendor, m_attacker)
    logger.debug(
        f"PT point {task.sweep_parameter}={task.sweep_value}: vendor value {vendor.value:.4f}, "
        f"attacker value {attacker.value:.4f}"
    )
    return RunRecord(
        mode="pt",
        vendor_strategy=vendor.y,
        attacker_strategy=attacker.x,
        vendor_value=vendor.value,
        attacker_value=attacker.value,
        delivery_time=security_level(task.objective, vendor.y),
        exploitability=max(vendor.exploitability, attacker.exploitability),
        mu_primal=vendor.mu_primal,
        mu_dual=attacker.mu_dual,
        shortest_path_probability=float(vendor.y.probabilities[_shortest_index(paths)]),
        vendor_params=task.vendor,
        attacker_params=task.attacker,
        sweep_parameter=task.sweep_parameter,
        sweep_value=task.sweep_value,
    )


def _run_tasks(tasks: list[SweepTask], workers: int) -> list[RunRecord]:
    """Solve sweep points inline or in a process pool, keeping sweep order."""
    if workers <= 0 or len(tasks) <= 1:
        return [solve_pt_point(task) for task in tasks]

    ctx = multiprocessing.get_context("spawn")
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks)), mp_context=ctx) as pool:
        logger.info(f"Solving {len(tasks)} sweep points on {workers} worker(s)")
        return list(pool.map(solve_pt_point, tasks))


def execute(config: ExperimentConfig) -> ExperimentReport:
    """
    Solve every run a configuration asks for, without writing files.

    ``eut`` yields one record for the objective game.  ``pt`` yields one
    record per sweep point (one record if there is no sweep).  ``both``
    yields the EUT record followed by the PT records.
    """
    graph, paths = load_graph(config.graph)
    L = incidence(graph, paths)
    objective = build_objective_matrix(graph, paths, L)
    shortest = _shortest_index(paths)

    records: list[RunRecord] = []
    if config.mode in ("eut", "both"):
        records.append(solve_eut(objective, shortest))

    if config.mode in ("pt", "both"):
        tasks = [
            SweepTask(
                graph=graph,
                paths=tuple(paths),
                objective=objective,
                vendor=vendor,
                attacker=attacker,
                sweep_parameter=parameter,
                sweep_value=value,
            )
            for parameter, value, vendor, attacker in _sweep_points(config)
        ]
        records.extend(_run_tasks(tasks, config.workers))

    return ExperimentReport(
        graph=graph,
        paths=tuple(paths),
        records=tuple(records),
        target_delivery_time=config.vendor.reference,
    )


def _sweep_points(
    config: ExperimentConfig,
) -> Iterator[tuple[str | None, float | None, ProspectParams, ProspectParams]]:
    if config.sweep is None:
        yield None, None, config.vendor, config.attacker
        return
    for value in config.sweep.values:
        vendor, attacker = config.sweep.apply(config.vendor, config.attacker, value)
        yield config.sweep.parameter, value, vendor, attacker


def _prepare_output_dir(output_dir: FilePath) -> None:
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ExperimentConfigError(f"Cannot create output directory {output_dir}: {e}") from e
    if not os.access(output_dir, os.W_OK):
        raise ExperimentConfigError(f"Output directory {output_dir} is not writable")


def run(config: ExperimentConfig) -> ExperimentReport:
    """
    Execute a configuration and write ``runs.csv`` and ``summary.txt``.

    Returns:
        The ExperimentReport that was written

    Raises:
        ExperimentConfigError: If the graph or output directory is unusable
        SolverError: Propagated from any solve
    """
    _prepare_output_dir(config.output_dir)
    report = execute(config)
    write_report(report, config.output_dir)
    return report


def loss_aversion_config(config: ExperimentConfig) -> ExperimentConfig:
    """
    The vendor loss-aversion grid derived from ``config``.

    Both players perceive with PAPER_LOSS_AVERSION_GAMMA and the vendor's
    loss exponent is PAPER_LOSS_AVERSION_BETA; every other setting is kept.
    """
    return config.model_copy(
        update={
            "mode": "pt",
            "vendor": config.vendor.with_values(
                gamma=PAPER_LOSS_AVERSION_GAMMA, beta=PAPER_LOSS_AVERSION_BETA
            ),
            "attacker": config.attacker.with_values(gamma=PAPER_LOSS_AVERSION_GAMMA),
            "sweep": SweepSpec(parameter="lambda_vendor", values=PAPER_LAMBDA_GRID),
        }
    )


def run_paper_figures(config: ExperimentConfig) -> ExperimentReport:
    """
    Solve the three published grids into one report.

    CGT, then the rationality sweep over PAPER_GAMMA_GRID, then the vendor
    loss-aversion sweep over PAPER_LAMBDA_GRID under
    :func:`loss_aversion_config`.
    """
    runs = [
        config.model_copy(update={"mode": "eut", "sweep": None}),
        config.model_copy(
            update={"mode": "pt", "sweep": SweepSpec(parameter="gamma", values=PAPER_GAMMA_GRID)}
        ),
        loss_aversion_config(config),
    ]
    report = execute(runs[0])
    for extra in runs[1:]:
        report = report.merge(execute(extra))
    return report

