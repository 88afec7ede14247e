"""
Built-in drone-delivery instance: 10 danger points, 18 edges, 18 paths.

Layered structure O=1 -> {2,3,4} -> {5,6} -> {7,8,9} -> D=10.  Edge times
are published as a flat vector; index k maps to the k-th edge when edges are
listed layer by layer in (from, to) order.  That mapping is the only one
under which the path through 1,2,5 reaches node 5 after t_1 + t_4 minutes
and the shortest routes rank (3,5,8) first with (2,5,8) and (4,5,8) tied.
"""

from typing import Any

from interdiction.models.graph import Path, SecurityGraph
from interdiction.services.graph import enumerate_paths, parse_graph

BUILTIN_PAPER = "builtin:paper"

PAPER_PROBABILITIES = [0.0, 0.2, 0.4, 0.2, 0.4, 0.4, 0.5, 0.8, 0.5, 0.0]

PAPER_EDGES = [
    (1, 2), (1, 3), (1, 4),
    (2, 5), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6),
    (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (6, 9),
    (7, 10), (8, 10), (9, 10),
]  # fmt: skip

PAPER_EDGE_TIMES = [3, 3, 3, 6, 6, 3, 6, 6, 6, 8, 6, 8, 10, 10, 10, 14, 12, 14]


def paper_document() -> dict[str, Any]:
    """The instance as a graph document, ids as strings "1".."10"."""
    return {
        "nodes": [{"id": str(i + 1), "p": p} for i, p in enumerate(PAPER_PROBABILITIES)],
        "edges": [
            {"from": str(a), "to": str(b), "t": t}
            for (a, b), t in zip(PAPER_EDGES, PAPER_EDGE_TIMES, strict=True)
        ],
        "origin": "1",
        "destination": "10",
    }


def builtin_paper_instance() -> tuple[SecurityGraph, list[Path]]:
    """
    Parse the built-in instance and enumerate its paths.

    Paths come out in canonical order, which is the published numbering:
    index 0 is (1,2,5,7,10), index 7 is the shortest path (1,3,5,8,10),
    index 17 is (1,4,6,9,10).
    """
    graph = parse_graph(paper_document())
    return graph, enumerate_paths(graph)
