"""
Reproduction checks on the built-in drone-delivery instance.

Path and node numbers in test names are 1-based as published; indices in
code are 0-based.
"""

import numpy as np
import pytest

from interdiction.models.game import MixedStrategy
from interdiction.schemas.experiment import ExperimentConfig, ProspectParams, SweepSpec
from interdiction.services.experiments import execute, loss_aversion_config, run_paper_figures
from interdiction.services.figures import FIGURES, emit_all_figures
from interdiction.services.graph import shortest_paths
from interdiction.services.solver import solve_zero_sum, verify_equilibrium

pytestmark = pytest.mark.integration

INTERIOR_LAST_LAYER = [6, 7, 8]  # nodes 7, 8, 9
NODE_8 = 7
SHORTEST = 7  # path 8: (1,3,5,8,10)


def _pt_report(sweep, **config):
    return execute(ExperimentConfig.model_validate({"mode": "pt", "sweep": sweep, **config}))


# --- structure ---


def test_eighteen_paths_with_path_eight_shortest(paper_instance):
    _, paths = paper_instance

    ranking = shortest_paths(paths)

    assert len(paths) == 18
    assert paths[SHORTEST].nodes == ("1", "3", "5", "8", "10")
    assert ranking[:3] == [7, 1, 13]
    assert [paths[h].total_time for h in ranking[:3]] == [24.0, 27.0, 27.0]


def test_published_path_totals(paper_instance):
    _, paths = paper_instance

    totals = [p.total_time for p in paths]

    assert totals == [31, 27, 31, 33, 31, 33, 28, 24, 28, 33, 31, 33, 31, 27, 31, 33, 31, 33]


# --- classical game ---


def test_primal_and_dual_agree(paper_saddle_point):
    s = paper_saddle_point

    assert s.mu_primal == pytest.approx(s.mu_dual, rel=1e-6)
    assert s.value == pytest.approx(1.0 / s.mu_primal - s.shift, rel=1e-9)
    assert s.exploitability <= 1e-6
    assert s.certified


def test_cgt_value_exceeds_the_shortest_route(paper_objective, paper_saddle_point):
    assert 24.0 < paper_saddle_point.value <= paper_objective.entries.max()


def test_cgt_attacker_concentrates_on_last_layer_with_node_8_most(
    paper_objective, paper_saddle_point
):
    x = paper_saddle_point.x.probabilities

    if set(paper_saddle_point.x.support) <= set(INTERIOR_LAST_LAYER):
        assert int(np.argmax(x)) == NODE_8
        return

    # Another optimal vertex: look for a certified equilibrium on nodes 7, 8, 9.
    restricted = solve_zero_sum(paper_objective.entries[:, INTERIOR_LAST_LAYER])
    x_full = np.zeros(len(x))
    x_full[INTERIOR_LAST_LAYER] = restricted.x.probabilities
    report = verify_equilibrium(paper_objective, restricted.y, MixedStrategy(x_full))

    assert restricted.value == pytest.approx(paper_saddle_point.value, rel=1e-9)
    assert report.exploitability <= 1e-6
    assert int(np.argmax(x_full)) == NODE_8


# --- prospect-theoretic games ---


def test_extreme_irrationality_concentrates_on_shortest_path():
    report = _pt_report({"parameter": "gamma", "values": [0.1]})

    (record,) = report.records
    assert record.shortest_path_probability == pytest.approx(0.94, abs=0.03)


def test_delivery_time_grows_as_rationality_drops():
    report = _pt_report({"parameter": "gamma", "values": [0.9, 0.1]})

    rational, irrational = report.records
    increase = irrational.delivery_time / rational.delivery_time - 1.0

    assert increase == pytest.approx(0.11, abs=0.03)


@pytest.mark.slow
def test_vendor_loss_aversion_pushes_toward_shortest_path():
    config = loss_aversion_config(ExperimentConfig()).model_copy(
        update={"mode": "both", "sweep": SweepSpec(parameter="lambda_vendor", values=[1, 10])}
    )

    cgt, low, high = execute(config).records

    assert 0.47 <= low.shortest_path_probability <= 0.59
    assert high.shortest_path_probability == pytest.approx(0.81, abs=0.04)
    assert high.delivery_time > low.delivery_time
    assert high.delivery_time > cgt.delivery_time
    assert high.delivery_time > 30.0


def test_pt_strategies_are_certified_on_their_own_matrices():
    report = _pt_report({"parameter": "gamma", "values": [0.1, 0.5, 0.9]})

    for record in report.records:
        assert record.exploitability <= 1e-6
        assert record.vendor_params == ProspectParams(gamma=record.sweep_value)


# --- full figure reproduction ---


@pytest.mark.slow
def test_paper_figures_emit_every_csv(tmp_path):
    report = run_paper_figures(ExperimentConfig(output_dir=tmp_path))

    written = emit_all_figures(report, tmp_path)

    assert [p.name for p in written] == [f"fig{figure}.csv" for figure in FIGURES]
    assert len(report.records) == 1 + 3 + 10
    fig6 = (tmp_path / "fig6.csv").read_text().splitlines()
    assert fig6[0] == (
        "lambda_vendor,shortest_path_probability,delivery_time,"
        "cgt_delivery_time,target_delivery_time"
    )
    assert len(fig6) == 11
