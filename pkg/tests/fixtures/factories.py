"""Test data factories for graph documents and payoff matrices."""

from typing import Any

import numpy as np


class GraphFactory:
    """Factory for creating graph documents."""

    @staticmethod
    def single_edge(time: float = 5.0) -> dict[str, Any]:
        """Two-node document O->D."""
        return {
            "nodes": [{"id": "O", "p": 0.0}, {"id": "D", "p": 0.0}],
            "edges": [{"from": "O", "to": "D", "t": time}],
            "origin": "O",
            "destination": "D",
        }

    @staticmethod
    def diamond(
        p_a: float = 0.3, p_b: float = 0.6, t_a: float = 4.0, t_b: float = 6.0
    ) -> dict[str, Any]:
        """
        O->a->D and O->b->D.

        Args:
            p_a: Attack success probability at a
            p_b: Attack success probability at b
            t_a: Time of each edge through a
            t_b: Time of each edge through b
        """
        return {
            "nodes": [
                {"id": "O", "p": 0.0},
                {"id": "a", "p": p_a},
                {"id": "b", "p": p_b},
                {"id": "D", "p": 0.0},
            ],
            "edges": [
                {"from": "O", "to": "a", "t": t_a},
                {"from": "O", "to": "b", "t": t_b},
                {"from": "a", "to": "D", "t": t_a},
                {"from": "b", "to": "D", "t": t_b},
            ],
            "origin": "O",
            "destination": "D",
        }

    @staticmethod
    def random_dag(
        rng: np.random.Generator, n_nodes: int, edge_probability: float = 0.4
    ) -> dict[str, Any]:
        """
        Random DAG on nodes "0".."n-1" with origin "0" and destination "n-1".

        Every interior node gets one earlier predecessor and one later
        successor, so every node lies on some origin-destination path.
        Node ids are shuffled in the document so document order differs
        from the topological order.
        """
        last = n_nodes - 1
        edges: set[tuple[int, int]] = {(0, last)} if n_nodes == 2 else set()
        for i in range(1, last):
            edges.add((int(rng.integers(0, i)), i))
            edges.add((i, int(rng.integers(i + 1, n_nodes))))
        for i in range(n_nodes):
            for j in range(i + 1, n_nodes):
                if rng.random() < edge_probability:
                    edges.add((i, j))

        order = rng.permutation(n_nodes)
        return {
            "nodes": [
                {"id": str(i), "p": 0.0 if i in (0, last) else round(float(rng.random()), 3)}
                for i in order
            ],
            "edges": [
                {"from": str(a), "to": str(b), "t": int(rng.integers(1, 11))}
                for a, b in sorted(edges)
            ],
            "origin": "0",
            "destination": str(last),
        }


class MatrixFactory:
    """Factory for random payoff matrices."""

    @staticmethod
    def uniform(
        rng: np.random.Generator,
        max_rows: int = 6,
        max_cols: int = 6,
        low: float = -10.0,
        high: float = 10.0,
    ) -> np.ndarray:
        rows = int(rng.integers(1, max_rows + 1))
        cols = int(rng.integers(1, max_cols + 1))
        return rng.uniform(low, high, size=(rows, cols))

    @staticmethod
    def with_duplicated_row(rng: np.random.Generator, size: int = 4) -> np.ndarray:
        """Square game whose last row copies the first, so the evader has two optimal rows."""
        m = rng.uniform(-10.0, 10.0, size=(size, size))
        return np.vstack([m, m[:1]])
