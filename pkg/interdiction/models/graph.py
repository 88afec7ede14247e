"""Domain models for the warehouse-to-customer security graph."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from itertools import accumulate

import networkx as nx
import numpy as np


@dataclass(frozen=True, slots=True)
class DangerPoint:
    """A node from which an attack on a traversing UAV can be launched."""

    id: str
    p: float


@dataclass(frozen=True, slots=True)
class Edge:
    """Directed shortest connection between two danger points, in minutes."""

    source: str
    target: str
    time: float


@dataclass(frozen=True)
class SecurityGraph:
    """
    Directed danger-point graph between an origin O and a destination D.

    Node order is the document order and is the canonical column order of
    every matrix built on this graph.

    Structural invariants (probability range, nonnegative times, no self-loops,
    no duplicate edges, distinct origin/destination) are enforced here.
    Reachability is enforced by ``services.graph.parse_graph`` so that
    programmatically built graphs may still have no O->D path.
    """

    nodes: tuple[DangerPoint, ...]
    edges: tuple[Edge, ...]
    origin: str
    destination: str

    def __post_init__(self) -> None:
        ids = [node.id for node in self.nodes]
        if len(set(ids)) != len(ids):
            raise ValueError("Duplicate node id in security graph")
        for node in self.nodes:
            if not 0.0 <= node.p <= 1.0:
                raise ValueError(f"Attack success probability of node {node.id} must be in [0, 1]")
        if self.origin == self.destination:
            raise ValueError("Origin and destination must differ")
        known = set(ids)
        for endpoint in (self.origin, self.destination):
            if endpoint not in known:
                raise ValueError(f"Endpoint {endpoint} is not a node of the graph")

        seen: set[tuple[str, str]] = set()
        for edge in self.edges:
            if edge.source not in known or edge.target not in known:
                raise ValueError(f"Edge {edge.source}->{edge.target} references an unknown node")
            if edge.source == edge.target:
                raise ValueError(f"Self-loop on node {edge.source}")
            if edge.time < 0:
                raise ValueError(f"Edge {edge.source}->{edge.target} has negative time")
            if (edge.source, edge.target) in seen:
                raise ValueError(f"Duplicate edge {edge.source}->{edge.target}")
            seen.add((edge.source, edge.target))

    @property
    def node_ids(self) -> tuple[str, ...]:
        return tuple(node.id for node in self.nodes)

    @cached_property
    def node_index(self) -> dict[str, int]:
        """Dense index of every node in document order."""
        return {node.id: i for i, node in enumerate(self.nodes)}

    @cached_property
    def probabilities(self) -> np.ndarray:
        """Attack success probabilities p_n in canonical column order."""
        values = np.array([node.p for node in self.nodes], dtype=float)
        values.setflags(write=False)
        return values

    @cached_property
    def edge_times(self) -> dict[tuple[str, str], float]:
        return {(edge.source, edge.target): edge.time for edge in self.edges}

    def to_networkx(self) -> nx.DiGraph:
        """Build a networkx view with node attribute ``p`` and edge attribute ``time``."""
        g = nx.DiGraph()
        for node in self.nodes:
            g.add_node(node.id, p=node.p)
        for edge in self.edges:
            g.add_edge(edge.source, edge.target, time=edge.time)
        return g


@dataclass(frozen=True)
class Path:
    """
    A simple O->D path with its derived arrival times.

    ``arrival_times[i]`` is the time to reach ``nodes[i]`` from the origin
    along this path, so the first entry is 0 and the last is ``total_time``.
    """

    nodes: tuple[str, ...]
    edge_times: tuple[float, ...]
    arrival_times: tuple[float, ...] = field(init=False)

    def __post_init__(self) -> None:
        if len(self.nodes) < 2:
            raise ValueError("A path needs at least an origin and a destination")
        if len(self.edge_times) != len(self.nodes) - 1:
            raise ValueError("A path needs exactly one edge time per hop")
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError(f"Path {self.nodes} repeats a node")
        object.__setattr__(self, "arrival_times", tuple(accumulate(self.edge_times, initial=0.0)))

    @property
    def origin(self) -> str:
        return self.nodes[0]

    @property
    def destination(self) -> str:
        return self.nodes[-1]

    @property
    def total_time(self) -> float:
        """f^h(D): the travel time of the whole path."""
        return self.arrival_times[-1]

    @property
    def arrival_time_at(self) -> Mapping[str, float]:
        return dict(zip(self.nodes, self.arrival_times, strict=True))

    @property
    def label(self) -> tuple[str, ...]:
        """Interior danger points, the short form used when listing paths."""
        return self.nodes[1:-1]

    def __contains__(self, node: object) -> bool:
        return node in self.nodes


@dataclass(frozen=True)
class IncidenceMatrix:
    """Binary H x N path-node incidence matrix L."""

    entries: np.ndarray
    paths: tuple[tuple[str, ...], ...]
    node_ids: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", np.array(self.entries, dtype=np.int8))
        if self.entries.shape != (len(self.paths), len(self.node_ids)):
            raise ValueError(
                f"Incidence shape {self.entries.shape} does not match "
                f"{len(self.paths)} paths x {len(self.node_ids)} nodes"
            )
        self.entries.setflags(write=False)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape  # type: ignore[return-value]
