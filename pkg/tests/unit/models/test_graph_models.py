"""Tests for security graph, path and incidence models."""

import networkx as nx
import numpy as np
import pytest

from interdiction.models.graph import DangerPoint, Edge, IncidenceMatrix, Path, SecurityGraph

pytestmark = pytest.mark.unit


def _graph(**overrides):
    fields = {
        "nodes": (DangerPoint("O", 0.0), DangerPoint("a", 0.5), DangerPoint("D", 0.0)),
        "edges": (Edge("O", "a", 2.0), Edge("a", "D", 3.0)),
        "origin": "O",
        "destination": "D",
    }
    return SecurityGraph(**{**fields, **overrides})


# --- SecurityGraph ---


def test_graph_indexes_nodes_in_document_order():
    graph = _graph()

    assert graph.node_ids == ("O", "a", "D")
    assert graph.node_index == {"O": 0, "a": 1, "D": 2}
    np.testing.assert_array_equal(graph.probabilities, [0.0, 0.5, 0.0])
    assert not graph.probabilities.flags.writeable


def test_graph_edge_times():
    assert _graph().edge_times == {("O", "a"): 2.0, ("a", "D"): 3.0}


def test_networkx_view_carries_attributes():
    g = _graph().to_networkx()

    assert isinstance(g, nx.DiGraph)
    assert g.nodes["a"]["p"] == 0.5
    assert g.edges["a", "D"]["time"] == 3.0


@pytest.mark.parametrize(
    "overrides, message",
    [
        ({"nodes": (DangerPoint("O", 0.0), DangerPoint("O", 0.0), DangerPoint("D", 0.0))},
         "Duplicate node"),
        ({"nodes": (DangerPoint("O", 0.0), DangerPoint("a", 1.5), DangerPoint("D", 0.0))},
         "node a"),
        ({"destination": "O"}, "must differ"),
        ({"origin": "X"}, "not a node"),
        ({"edges": (Edge("O", "X", 1.0),)}, "unknown node"),
        ({"edges": (Edge("a", "a", 1.0),)}, "Self-loop"),
        ({"edges": (Edge("O", "a", -1.0),)}, "negative time"),
        ({"edges": (Edge("O", "a", 1.0), Edge("O", "a", 2.0))}, "Duplicate edge"),
    ],
)  # fmt: skip
def test_graph_invariants(overrides, message):
    with pytest.raises(ValueError, match=message):
        _graph(**overrides)


def test_graphs_compare_by_structure():
    assert _graph() == _graph()
    assert _graph() != _graph(edges=(Edge("O", "a", 2.0), Edge("a", "D", 4.0)))


# --- Path ---


def test_path_arrival_times():
    path = Path(nodes=("O", "a", "b", "D"), edge_times=(3.0, 6.0, 8.0))

    assert path.arrival_times == (0.0, 3.0, 9.0, 17.0)
    assert path.total_time == 17.0
    assert path.arrival_time_at["b"] == 9.0
    assert path.label == ("a", "b")
    assert "b" in path and "c" not in path


def test_path_endpoints():
    path = Path(nodes=("O", "D"), edge_times=(5.0,))

    assert (path.origin, path.destination) == ("O", "D")
    assert path.label == ()


@pytest.mark.parametrize(
    "nodes, times, message",
    [
        (("O",), (), "at least"),
        (("O", "a", "D"), (1.0,), "one edge time per hop"),
        (("O", "a", "O", "D"), (1.0, 1.0, 1.0), "repeats"),
    ],
)
def test_path_invariants(nodes, times, message):
    with pytest.raises(ValueError, match=message):
        Path(nodes=nodes, edge_times=times)


# --- IncidenceMatrix ---


def test_incidence_is_binary_and_read_only():
    L = IncidenceMatrix(
        entries=[[1, 1, 0, 1]], paths=(("O", "a", "D"),), node_ids=("O", "a", "b", "D")
    )

    assert L.entries.dtype == np.int8
    assert L.shape == (1, 4)
    assert not L.entries.flags.writeable


def test_incidence_shape_must_match_labels():
    with pytest.raises(ValueError, match="does not match"):
        IncidenceMatrix(entries=[[1, 1]], paths=(("O", "D"),), node_ids=("O", "a", "D"))
