"""Result records produced by experiment runs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from interdiction.models.game import MixedStrategy
from interdiction.models.graph import Path, SecurityGraph
from interdiction.schemas.experiment import ProspectParams


@dataclass(frozen=True)
class RunRecord:
    """
    One solved game.

    For an ``eut`` record both values are the saddle-point value T* of the
    objective game.  For a ``pt`` record ``vendor_value`` is the vendor's
    security level on its subjective matrix and ``attacker_value`` the
    attacker's on its own.  ``delivery_time`` is always the worst-case
    objective delivery time of the vendor strategy, max_n (y^T M)_n; for
    an ``eut`` record it equals T*.
    """

    mode: Literal["eut", "pt"]
    vendor_strategy: MixedStrategy
    attacker_strategy: MixedStrategy
    vendor_value: float
    attacker_value: float
    delivery_time: float
    exploitability: float
    mu_primal: float
    mu_dual: float
    shortest_path_probability: float
    vendor_params: ProspectParams | None = None
    attacker_params: ProspectParams | None = None
    sweep_parameter: str | None = None
    sweep_value: float | None = None

    @property
    def label(self) -> str:
        if self.mode == "eut":
            return "cgt"
        if self.sweep_parameter is None:
            return "pt"
        return f"{self.sweep_parameter}={self.sweep_value:g}"


@dataclass(frozen=True)
class ExperimentReport:
    """All records of one or more runs over the same graph, in run order."""

    graph: SecurityGraph
    paths: tuple[Path, ...]
    records: tuple[RunRecord, ...]
    target_delivery_time: float

    @property
    def shortest_path_index(self) -> int:
        return min(range(len(self.paths)), key=lambda h: (self.paths[h].total_time, h))

    @property
    def eut_record(self) -> RunRecord | None:
        return next((r for r in self.records if r.mode == "eut"), None)

    def sweep_records(self, parameter: str) -> list[RunRecord]:
        return [r for r in self.records if r.mode == "pt" and r.sweep_parameter == parameter]

    def merge(self, other: ExperimentReport) -> ExperimentReport:
        """Concatenate records of another report over the same graph."""
        if other.graph != self.graph:
            raise ValueError("Cannot merge reports over different graphs")
        return ExperimentReport(
            graph=self.graph,
            paths=self.paths,
            records=self.records + other.records,
            target_delivery_time=self.target_delivery_time,
        )
