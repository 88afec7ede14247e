"""Security graph parsing, simple-path enumeration and path-node incidence."""

import json
import logging
from collections.abc import Mapping, Sequence
from pathlib import Path as FilePath
from typing import Any

import networkx as nx
import numpy as np
from pydantic import ValidationError

from interdiction.models.graph import DangerPoint, Edge, IncidenceMatrix, Path, SecurityGraph
from interdiction.schemas.graph_document import GraphDocument

logger = logging.getLogger(__name__)


class GraphValidationError(Exception):
    """Graph document is malformed or violates a graph invariant."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class PathError(Exception):
    """A node lookup on a path failed."""

    pass


def parse_graph(document: str | bytes | Mapping[str, Any] | FilePath) -> SecurityGraph:
    """
    Parse and validate a security graph document.

    Expected JSON format:
    {
        "nodes": [{"id": "1", "p": 0.0}, ...],
        "edges": [{"from": "1", "to": "2", "t": 3}, ...],
        "origin": "1",
        "destination": "10"
    }

    Args:
        document: JSON text/bytes, an already-decoded mapping, or a file path

    Returns:
        Validated SecurityGraph

    Raises:
        GraphValidationError: On malformed input or any violated invariant;
            ``field`` names the offending part of the document.
    """
    raw = _load_document(document)

    try:
        doc = GraphDocument.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise GraphValidationError(
            f"Malformed graph document at {location}: {first['msg']}", field=location
        ) from e

    for i, node in enumerate(doc.nodes):
        if not 0.0 <= node.p <= 1.0:
            raise GraphValidationError(
                f"Probability of node {node.id} is {node.p}, must be in [0, 1]",
                field=f"nodes.{i}.p",
            )
    for i, edge in enumerate(doc.edges):
        if edge.t < 0:
            raise GraphValidationError(
                f"Edge {edge.source}->{edge.target} has negative time {edge.t}",
                field=f"edges.{i}.t",
            )

    node_ids: set[str] = set()
    for i, node in enumerate(doc.nodes):
        if node.id in node_ids:
            raise GraphValidationError(f"Duplicate node id {node.id}", field=f"nodes.{i}")
        node_ids.add(node.id)
    for key in ("origin", "destination"):
        endpoint = getattr(doc, key)
        if endpoint not in node_ids:
            raise GraphValidationError(
                f"{key.capitalize()} {endpoint} is not a declared node", field=key
            )
    if doc.origin == doc.destination:
        raise GraphValidationError("Origin and destination must differ", field="destination")

    seen: set[tuple[str, str]] = set()
    for i, edge in enumerate(doc.edges):
        for end in (edge.source, edge.target):
            if end not in node_ids:
                raise GraphValidationError(
                    f"Edge {edge.source}->{edge.target} references unknown node {end}",
                    field=f"edges.{i}",
                )
        if edge.source == edge.target:
            raise GraphValidationError(f"Self-loop on node {edge.source}", field=f"edges.{i}")
        if (edge.source, edge.target) in seen:
            raise GraphValidationError(
                f"Duplicate edge {edge.source}->{edge.target}", field=f"edges.{i}"
            )
        seen.add((edge.source, edge.target))

    try:
        graph = SecurityGraph(
            nodes=tuple(DangerPoint(id=node.id, p=node.p) for node in doc.nodes),
            edges=tuple(Edge(source=e.source, target=e.target, time=e.t) for e in doc.edges),
            origin=doc.origin,
            destination=doc.destination,
        )
    except ValueError as e:
        raise GraphValidationError(str(e)) from e

    _check_reachability(graph)
    logger.info(
        f"Parsed security graph with {len(graph.nodes)} nodes and {len(graph.edges)} edges"
    )
    return graph


def _load_document(document: str | bytes | Mapping[str, Any] | FilePath) -> Any:
    if isinstance(document, Mapping):
        return document
    if isinstance(document, FilePath):
        try:
            document = document.read_text(encoding="utf-8")
        except OSError as e:
            raise GraphValidationError(f"Cannot read graph document {document}: {e}") from e
    try:
        return json.loads(document)
    except json.JSONDecodeError as e:
        raise GraphValidationError(f"Graph document is not valid JSON: {e}") from e


def _check_reachability(graph: SecurityGraph) -> None:
    """Reject nodes that no simple O->D path traverses."""
    g = graph.to_networkx()
    from_origin = nx.descendants(g, graph.origin) | {graph.origin}
    to_destination = nx.ancestors(g, graph.destination) | {graph.destination}

    if graph.destination not in from_origin:
        raise GraphValidationError(
            f"Destination {graph.destination} is unreachable from origin {graph.origin}",
            field="destination",
        )

    for i, node_id in enumerate(graph.node_ids):
        if node_id not in from_origin or node_id not in to_destination:
            raise GraphValidationError(
                f"Node {node_id} does not lie on any origin-destination path", field=f"nodes.{i}"
            )

    # Cycles can make a node reachable both ways yet absent from every simple path.
    covered = {node for path in enumerate_paths(graph) for node in path.nodes}
    for i, node_id in enumerate(graph.node_ids):
        if node_id not in covered:
            raise GraphValidationError(
                f"Node {node_id} does not lie on any simple origin-destination path",
                field=f"nodes.{i}",
            )


def enumerate_paths(graph: SecurityGraph) -> list[Path]:
    """
    Enumerate every simple directed O->D path exactly once.

    Paths are ordered lexicographically by their node sequence under the
    document node order, which is the canonical row order of every matrix.
    Enumeration is a depth-first search with an on-path visited set and is
    exponential in the worst case; graphs here have tens of nodes.

    Args:
        graph: Security graph

    Returns:
        Canonically ordered paths (empty if no O->D path exists)
    """
    index = graph.node_index
    sequences = nx.all_simple_paths(graph.to_networkx(), graph.origin, graph.destination)
    ordered = sorted((tuple(seq) for seq in sequences), key=lambda seq: [index[n] for n in seq])

    times = graph.edge_times
    paths = [
        Path(nodes=seq, edge_times=tuple(times[(a, b)] for a, b in zip(seq, seq[1:])))
        for seq in ordered
    ]
    logger.debug(f"Enumerated {len(paths)} simple paths from {graph.origin} to {graph.destination}")
    return paths


def arrival_time(path: Path, node: str) -> float:
    """
    Time to reach ``node`` from the origin along ``path`` (f^h(n)).

    Raises:
        PathError: If ``node`` is not on ``path``
    """
    try:
        position = path.nodes.index(node)
    except ValueError:
        raise PathError(f"Node {node} is not on path {path.nodes}") from None
    return path.arrival_times[position]


def incidence(graph: SecurityGraph, paths: Sequence[Path]) -> IncidenceMatrix:
    """
    Build the H x N binary path-node incidence matrix L.

    Args:
        graph: Security graph providing the column order
        paths: Paths in row order, normally from enumerate_paths

    Returns:
        IncidenceMatrix with l_hn = 1 exactly when node n is on path h
    """
    index = graph.node_index
    entries = np.zeros((len(paths), len(graph.nodes)), dtype=np.int8)
    for h, path in enumerate(paths):
        entries[h, [index[n] for n in path.nodes]] = 1
    return IncidenceMatrix(
        entries=entries,
        paths=tuple(path.nodes for path in paths),
        node_ids=graph.node_ids,
    )


def shortest_paths(paths: Sequence[Path]) -> list[int]:
    """Path indices ordered by total time, ties kept in canonical order."""
    return sorted(range(len(paths)), key=lambda h: (paths[h].total_time, h))
