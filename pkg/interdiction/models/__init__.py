"""Domain models."""

from interdiction.models.game import (
    ConstraintSense,
    EquilibriumReport,
    GameSolution,
    LpProblem,
    LpResult,
    MixedStrategy,
    PayoffKind,
    PayoffMatrix,
)
from interdiction.models.experiment import ExperimentReport, RunRecord
from interdiction.models.graph import DangerPoint, Edge, IncidenceMatrix, Path, SecurityGraph

__all__ = [
    "ConstraintSense",
    "DangerPoint",
    "Edge",
    "EquilibriumReport",
    "ExperimentReport",
    "GameSolution",
    "IncidenceMatrix",
    "LpProblem",
    "LpResult",
    "MixedStrategy",
    "Path",
    "PayoffKind",
    "PayoffMatrix",
    "RunRecord",
    "SecurityGraph",
]
