"""Domain models for matrix games, strategies and LP problems."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np

from interdiction.config import STRATEGY_SUM_TOLERANCE


class PayoffKind(StrEnum):
    """Which valuation produced a payoff matrix."""

    OBJECTIVE = "objective"
    VENDOR_SUBJECTIVE = "vendor-subjective"
    ATTACKER_SUBJECTIVE = "attacker-subjective"


@dataclass(frozen=True)
class PayoffMatrix:
    """
    H x N matrix of evader-path x attacker-node outcomes.

    The evader (row player) minimizes and the interdictor (column player)
    maximizes ``y^T entries x``.  ``row_labels`` and ``column_labels`` carry
    the canonical path and node orders of the graph the matrix was built on.
    """

    entries: np.ndarray
    kind: PayoffKind
    row_labels: tuple[tuple[str, ...], ...] = ()
    column_labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=float)
        if entries.ndim != 2 or 0 in entries.shape:
            raise ValueError(f"Payoff matrix must be a non-empty 2-D array, got {entries.shape}")
        object.__setattr__(self, "entries", entries)
        if self.row_labels and len(self.row_labels) != self.entries.shape[0]:
            raise ValueError("Row labels do not match the number of rows")
        if self.column_labels and len(self.column_labels) != self.entries.shape[1]:
            raise ValueError("Column labels do not match the number of columns")
        self.entries.setflags(write=False)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape  # type: ignore[return-value]


@dataclass(frozen=True)
class MixedStrategy:
    """Probability vector over paths (y) or nodes (x)."""

    probabilities: np.ndarray

    def __post_init__(self) -> None:
        probs = np.array(self.probabilities, dtype=float)
        if probs.ndim != 1 or probs.size == 0:
            raise ValueError("A mixed strategy must be a non-empty vector")
        if np.any(probs < 0):
            raise ValueError("Mixed strategy has negative entries")
        if abs(probs.sum() - 1.0) > STRATEGY_SUM_TOLERANCE:
            raise ValueError(f"Mixed strategy sums to {probs.sum():.12f}, expected 1")
        probs.setflags(write=False)
        object.__setattr__(self, "probabilities", probs)

    @classmethod
    def pure(cls, size: int, index: int) -> MixedStrategy:
        probs = np.zeros(size)
        probs[index] = 1.0
        return cls(probs)

    @classmethod
    def uniform(cls, size: int) -> MixedStrategy:
        return cls(np.full(size, 1.0 / size))

    @classmethod
    def from_weights(cls, weights: np.ndarray, *, clip: float = 1e-12) -> MixedStrategy:
        """Normalize nonnegative solver weights, dropping round-off below ``clip``."""
        w = np.asarray(weights, dtype=float).copy()
        w[np.abs(w) < clip] = 0.0
        if np.any(w < 0):
            raise ValueError("Cannot normalize weights with negative entries")
        total = w.sum()
        if total <= 0:
            raise ValueError("Cannot normalize an all-zero weight vector")
        return cls(w / total)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.probabilities > 0))

    def __len__(self) -> int:
        return int(self.probabilities.size)


class ConstraintSense(StrEnum):
    LE = "<="
    GE = ">="
    EQ = "="


@dataclass(frozen=True)
class LpProblem:
    """
    Linear program over nonnegative variables.

    optimize ``objective @ x`` subject to ``constraints[i] @ x (sense_i) rhs[i]``
    and ``x >= 0``.
    """

    objective: np.ndarray
    constraints: np.ndarray
    senses: tuple[ConstraintSense, ...]
    rhs: np.ndarray
    maximize: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "objective", np.asarray(self.objective, dtype=float))
        constraints = np.atleast_2d(np.asarray(self.constraints, dtype=float))
        object.__setattr__(self, "constraints", constraints)
        object.__setattr__(self, "rhs", np.asarray(self.rhs, dtype=float))
        object.__setattr__(self, "senses", tuple(ConstraintSense(s) for s in self.senses))
        m, n = self.constraints.shape
        if self.objective.shape != (n,):
            raise ValueError(f"Objective has shape {self.objective.shape}, expected ({n},)")
        if self.rhs.shape != (m,):
            raise ValueError(f"Right-hand side has shape {self.rhs.shape}, expected ({m},)")
        if len(self.senses) != m:
            raise ValueError(f"Got {len(self.senses)} senses for {m} constraints")

    @property
    def num_variables(self) -> int:
        return int(self.constraints.shape[1])

    @property
    def num_constraints(self) -> int:
        return int(self.constraints.shape[0])


@dataclass(frozen=True, slots=True)
class LpResult:
    """Optimal basic feasible solution returned by the simplex kernel."""

    x: np.ndarray
    value: float
    iterations: int
    phase_one_iterations: int = 0
    bland_engaged: bool = False


@dataclass(frozen=True, slots=True)
class EquilibriumReport:
    """Best-response gaps of a strategy pair.

    ``evader_gap`` is how much the row player could lower the payoff with a
    pure deviation; ``interdictor_gap`` how much the column player could
    raise it.  Both are clamped at zero.
    """

    value: float
    evader_gap: float
    interdictor_gap: float
    tolerance: float

    @property
    def exploitability(self) -> float:
        return max(self.evader_gap, self.interdictor_gap)

    @property
    def is_equilibrium(self) -> bool:
        return self.exploitability <= self.tolerance


@dataclass(frozen=True)
class GameSolution:
    """Strategy pair, game value and certificate of a solved zero-sum game."""

    y: MixedStrategy
    x: MixedStrategy
    value: float
    value_primal: float
    value_dual: float
    mu_primal: float
    mu_dual: float
    exploitability: float
    evader_gap: float
    interdictor_gap: float
    shift: float
    iterations: dict[str, int] = field(default_factory=dict)
    certified: bool = True
