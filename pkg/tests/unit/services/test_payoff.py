"""Unit tests for the objective and prospect payoff matrices."""

import numpy as np
import pytest

from interdiction.models.game import MixedStrategy, PayoffKind, PayoffMatrix
from interdiction.schemas.experiment import ProspectParams
from interdiction.services.graph import enumerate_paths, incidence, parse_graph
from interdiction.services.payoff import (
    DimensionMismatchError,
    build_objective_matrix,
    build_pt_matrices,
    build_pt_matrix,
    expected_delivery_time,
)
from interdiction.services.prospect import prelec_weight
from tests.fixtures.factories import GraphFactory

pytestmark = pytest.mark.unit

IDENTITY = ProspectParams(gamma=1.0, loss_multiplier=1.0, beta=1.0, alpha=1.0, reference=0.0)


def _column(graph, node):
    return graph.node_index[node]


# --- build_objective_matrix ---


def test_objective_entry_on_paper_instance(paper_instance, paper_objective):
    graph, _ = paper_instance

    # Path (2,5,7) reaches node 5 after 9 minutes and takes 31 in total.
    assert paper_objective.entries[0, _column(graph, "5")] == pytest.approx(0.4 * 9 + 31)


def test_objective_matches_two_outcome_expectation(paper_instance, paper_objective):
    graph, paths = paper_instance

    for h, path in enumerate(paths):
        for n, node in enumerate(graph.node_ids):
            total = path.total_time
            if node in path:
                p = graph.probabilities[n]
                expected = p * (path.arrival_time_at[node] + total) + (1 - p) * total
            else:
                expected = total
            assert paper_objective.entries[h, n] == pytest.approx(expected)


def test_objective_off_path_entries_equal_path_time(paper_instance, paper_objective, paper_incidence):
    _, paths = paper_instance
    totals = np.array([p.total_time for p in paths])

    off = paper_incidence.entries == 0
    rows = np.nonzero(off)[0]

    np.testing.assert_allclose(paper_objective.entries[off], totals[rows])


def test_objective_origin_column_equals_path_time(paper_instance, paper_objective):
    _, paths = paper_instance

    np.testing.assert_allclose(paper_objective.entries[:, 0], [p.total_time for p in paths])


def test_objective_entries_at_least_path_time(paper_instance, paper_objective):
    _, paths = paper_instance
    totals = np.array([p.total_time for p in paths])

    assert np.all(paper_objective.entries >= totals[:, np.newaxis])
    assert paper_objective.kind == PayoffKind.OBJECTIVE


def test_objective_monotone_in_probability():
    base = GraphFactory.diamond(p_a=0.3)
    raised = GraphFactory.diamond(p_a=0.7)

    matrices = []
    for document in (base, raised):
        graph = parse_graph(document)
        paths = enumerate_paths(graph)
        matrices.append(build_objective_matrix(graph, paths, incidence(graph, paths)))

    column = 1
    assert np.all(matrices[1].entries[:, column] >= matrices[0].entries[:, column])


def test_objective_rejects_mismatched_incidence(paper_instance, diamond_graph):
    graph, paths = paper_instance
    foreign = incidence(diamond_graph, enumerate_paths(diamond_graph))

    with pytest.raises(DimensionMismatchError):
        build_objective_matrix(graph, paths, foreign)


def test_objective_rejects_reordered_paths(paper_instance, paper_incidence):
    graph, paths = paper_instance

    with pytest.raises(DimensionMismatchError):
        build_objective_matrix(graph, list(reversed(paths)), paper_incidence)


# --- build_pt_matrix ---


def test_pt_degenerates_to_objective(paper_instance, paper_incidence, paper_objective):
    graph, paths = paper_instance

    for player in ("vendor", "attacker"):
        m = build_pt_matrix(player, graph, paths, paper_incidence, IDENTITY)
        np.testing.assert_allclose(m.entries, paper_objective.entries, rtol=0, atol=1e-12)


@pytest.mark.parametrize("seed", range(10))
def test_pt_degenerates_to_objective_on_random_graphs(seed):
    rng = np.random.default_rng(seed)
    graph = parse_graph(GraphFactory.random_dag(rng, n_nodes=int(rng.integers(3, 9))))
    paths = enumerate_paths(graph)
    L = incidence(graph, paths)

    objective = build_objective_matrix(graph, paths, L)
    vendor, attacker = build_pt_matrices(graph, paths, L, IDENTITY, IDENTITY)

    np.testing.assert_allclose(vendor.entries, objective.entries, rtol=0, atol=1e-12)
    np.testing.assert_allclose(attacker.entries, objective.entries, rtol=0, atol=1e-12)


def test_vendor_pt_entry_on_paper_instance(paper_instance, paper_incidence):
    graph, paths = paper_instance
    params = ProspectParams(gamma=0.5, loss_multiplier=5, beta=0.8, alpha=0.2, reference=30)

    m = build_pt_matrix("vendor", graph, paths, paper_incidence, params)

    framed = prelec_weight(0.4, 0.5) * 9 + 31 - 30
    assert framed == pytest.approx(4.455, abs=1e-3)
    assert m.entries[0, _column(graph, "5")] == pytest.approx(5 * framed**0.8, rel=1e-12)
    assert m.kind == PayoffKind.VENDOR_SUBJECTIVE


def test_attacker_pt_entry_on_paper_instance(paper_instance, paper_incidence):
    graph, paths = paper_instance
    params = ProspectParams(gamma=0.5, loss_multiplier=5, beta=0.8, alpha=0.2, reference=30)

    m = build_pt_matrix("attacker", graph, paths, paper_incidence, params)

    # Path (3,5,8) is 24 minutes: six minutes early is a loss for the attacker.
    assert m.entries[7, 0] == pytest.approx(-5 * 6**0.8, rel=1e-12)
    assert m.kind == PayoffKind.ATTACKER_SUBJECTIVE


def test_pt_entry_at_reference_is_zero(diamond_graph):
    paths = enumerate_paths(diamond_graph)
    L = incidence(diamond_graph, paths)
    params = ProspectParams(reference=paths[0].total_time)

    m = build_pt_matrix("vendor", diamond_graph, paths, L, params)

    # Column b is off path (O,a,D).
    assert m.entries[0, 2] == 0.0


def test_pt_rejects_unknown_player(paper_instance, paper_incidence):
    graph, paths = paper_instance

    with pytest.raises(ValueError, match="Unknown player"):
        build_pt_matrix("customer", graph, paths, paper_incidence, IDENTITY)  # type: ignore[arg-type]


# --- expected_delivery_time ---


def test_pure_strategies_pick_an_entry(paper_objective):
    y = MixedStrategy.pure(18, 0)
    x = MixedStrategy.pure(10, 4)

    assert expected_delivery_time(y, x, paper_objective) == paper_objective.entries[0, 4]


def test_one_by_one_game():
    m = PayoffMatrix(entries=np.array([[7.0]]), kind=PayoffKind.OBJECTIVE)

    assert expected_delivery_time(MixedStrategy.uniform(1), MixedStrategy.uniform(1), m) == 7.0


def test_uniform_strategies_match_double_loop(paper_instance, paper_objective):
    graph, paths = paper_instance

    total = 0.0
    for path in paths:
        for n, node in enumerate(graph.node_ids):
            hit = path.arrival_time_at[node] * graph.probabilities[n] if node in path else 0.0
            total += hit + path.total_time
    expected = total / (len(paths) * len(graph.nodes))

    value = expected_delivery_time(
        MixedStrategy.uniform(18), MixedStrategy.uniform(10), paper_objective
    )
    assert value == pytest.approx(expected, rel=1e-12)


def test_bilinear_in_each_strategy(rng, paper_objective):
    y1 = MixedStrategy.from_weights(rng.random(18))
    y2 = MixedStrategy.from_weights(rng.random(18))
    x = MixedStrategy.from_weights(rng.random(10))
    t = 0.3

    mixed = MixedStrategy.from_weights(t * y1.probabilities + (1 - t) * y2.probabilities)

    combined = t * expected_delivery_time(y1, x, paper_objective) + (1 - t) * expected_delivery_time(
        y2, x, paper_objective
    )
    assert expected_delivery_time(mixed, x, paper_objective) == pytest.approx(combined, rel=1e-12)


def test_rejects_mismatched_strategy(paper_objective):
    with pytest.raises(DimensionMismatchError):
        expected_delivery_time(MixedStrategy.uniform(17), MixedStrategy.uniform(10), paper_objective)
