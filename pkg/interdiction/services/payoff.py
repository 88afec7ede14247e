"""Objective and prospect-theoretic payoff matrices of the interdiction game."""

import logging
from collections.abc import Sequence
from typing import Literal

import numpy as np

from interdiction.models.game import MixedStrategy, PayoffKind, PayoffMatrix
from interdiction.models.graph import IncidenceMatrix, Path, SecurityGraph
from interdiction.schemas.experiment import ProspectParams
from interdiction.services.prospect import prelec_weight, value_attacker, value_vendor

logger = logging.getLogger(__name__)

Player = Literal["vendor", "attacker"]


class DimensionMismatchError(ValueError):
    """Graph, paths, incidence matrix or strategies disagree on dimensions."""

    pass


def _check_consistent(graph: SecurityGraph, paths: Sequence[Path], L: IncidenceMatrix) -> None:
    expected = (len(paths), len(graph.nodes))
    if L.shape != expected:
        raise DimensionMismatchError(
            f"Incidence matrix is {L.shape}, expected {expected} for {len(paths)} paths "
            f"over {len(graph.nodes)} nodes"
        )
    if L.node_ids != graph.node_ids:
        raise DimensionMismatchError("Incidence columns are not in the graph's node order")
    if L.paths != tuple(path.nodes for path in paths):
        raise DimensionMismatchError("Incidence rows are not in the given path order")


def _arrival_matrix(graph: SecurityGraph, paths: Sequence[Path]) -> np.ndarray:
    """H x N matrix of f^h(n), zero where n is not on h."""
    index = graph.node_index
    arrivals = np.zeros((len(paths), len(graph.nodes)))
    for h, path in enumerate(paths):
        arrivals[h, [index[n] for n in path.nodes]] = path.arrival_times
    return arrivals


def _labels(graph: SecurityGraph, paths: Sequence[Path]) -> dict:
    return {
        "row_labels": tuple(path.nodes for path in paths),
        "column_labels": graph.node_ids,
    }


def build_objective_matrix(
    graph: SecurityGraph, paths: Sequence[Path], L: IncidenceMatrix
) -> PayoffMatrix:
    """
    Build the expected-delivery-time matrix M.

    m_hn = l_hn * p_n * f^h(n) + f^h(D): with probability p_n an attack at
    n destroys the UAV after f^h(n) minutes and a replacement flies the
    cleared path again.

    Raises:
        DimensionMismatchError: If graph, paths and L disagree
    """
    _check_consistent(graph, paths, L)
    totals = np.array([path.total_time for path in paths])
    entries = L.entries * graph.probabilities[np.newaxis, :] * _arrival_matrix(graph, paths)
    entries = entries + totals[:, np.newaxis]
    logger.debug(f"Built objective payoff matrix of shape {entries.shape}")
    return PayoffMatrix(entries=entries, kind=PayoffKind.OBJECTIVE, **_labels(graph, paths))


def build_pt_matrix(
    player: Player,
    graph: SecurityGraph,
    paths: Sequence[Path],
    L: IncidenceMatrix,
    params: ProspectParams,
) -> PayoffMatrix:
    """
    Build a player's subjective payoff matrix M^{z,PT}.

    Each cell is v_z(l_hn * w_z(p_n) * f^h(n) + f^h(D) - R_z): the success
    probability is weighted inside, the framed outcome valued outside.

    Args:
        player: "vendor" or "attacker"
        graph: Security graph
        paths: Canonically ordered paths
        L: Incidence matrix of ``paths``
        params: The player's prospect parameters

    Raises:
        DimensionMismatchError: If graph, paths and L disagree
        ValueError: If ``player`` is unknown
    """
    _check_consistent(graph, paths, L)
    weights = prelec_weight(np.asarray(graph.probabilities), params.gamma)
    totals = np.array([path.total_time for path in paths])
    framed = (
        L.entries * weights[np.newaxis, :] * _arrival_matrix(graph, paths)
        + totals[:, np.newaxis]
        - params.reference
    )

    if player == "vendor":
        entries = value_vendor(framed, params)
        kind = PayoffKind.VENDOR_SUBJECTIVE
    elif player == "attacker":
        entries = value_attacker(framed, params)
        kind = PayoffKind.ATTACKER_SUBJECTIVE
    else:
        raise ValueError(f"Unknown player: {player}")

    logger.debug(f"Built {kind} payoff matrix with gamma={params.gamma}")
    return PayoffMatrix(entries=entries, kind=kind, **_labels(graph, paths))


def build_pt_matrices(
    graph: SecurityGraph,
    paths: Sequence[Path],
    L: IncidenceMatrix,
    vendor: ProspectParams,
    attacker: ProspectParams,
) -> tuple[PayoffMatrix, PayoffMatrix]:
    """Both subjective matrices, vendor first."""
    return (
        build_pt_matrix("vendor", graph, paths, L, vendor),
        build_pt_matrix("attacker", graph, paths, L, attacker),
    )


def expected_delivery_time(y: MixedStrategy, x: MixedStrategy, m: PayoffMatrix) -> float:
    """
    Bilinear payoff y^T M x.

    On the objective matrix this is the expected delivery time; on a
    subjective matrix it is that player's prospect valuation.

    Raises:
        DimensionMismatchError: If strategy lengths do not match the matrix
    """
    rows, cols = m.shape
    if len(y) != rows or len(x) != cols:
        raise DimensionMismatchError(
            f"Strategies of length ({len(y)}, {len(x)}) do not fit a {rows}x{cols} matrix"
        )
    return float(y.probabilities @ m.entries @ x.probabilities)
