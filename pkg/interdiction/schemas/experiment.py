"""Pydantic models for prospect parameters and experiment configuration."""

from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from interdiction.config import (
    OUTPUT_DIR,
    PT_DEFAULT_ALPHA,
    PT_DEFAULT_BETA,
    PT_DEFAULT_GAMMA,
    PT_DEFAULT_LAMBDA,
    SWEEP_WORKERS,
    TARGET_DELIVERY_TIME,
)

SweepParameter = Literal[
    "gamma",
    "gamma_vendor",
    "gamma_attacker",
    "lambda_vendor",
    "lambda_attacker",
    "reference",
]


class ProspectParams(BaseModel):
    """Subjective-perception parameters of one player.

    ``gamma`` is the Prelec rationality exponent, ``loss_multiplier`` (alias
    ``lambda``) scales losses, ``beta`` and ``alpha`` are the loss and gain
    exponents, and ``reference`` is the delivery time outcomes are framed
    against.  ``exploratory`` lifts the ``alpha, beta <= 1`` cap.
    """

    model_config = ConfigDict(populate_by_name=True, frozen=True, extra="forbid")

    gamma: float = PT_DEFAULT_GAMMA
    loss_multiplier: float = Field(PT_DEFAULT_LAMBDA, alias="lambda")
    beta: float = PT_DEFAULT_BETA
    alpha: float = PT_DEFAULT_ALPHA
    reference: float = TARGET_DELIVERY_TIME
    exploratory: bool = False

    @model_validator(mode="after")
    def _check_domains(self) -> "ProspectParams":
        if not 0.0 < self.gamma <= 1.0:
            raise ValueError(f"gamma must be in (0, 1], got {self.gamma}")
        if self.loss_multiplier < 1.0:
            raise ValueError(f"lambda must be >= 1, got {self.loss_multiplier}")
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if value <= 0.0:
                raise ValueError(f"{name} must be positive, got {value}")
            if value > 1.0 and not self.exploratory:
                raise ValueError(f"{name} must be in (0, 1] unless exploratory is set, got {value}")
        return self

    def with_values(self, **changes: Any) -> "ProspectParams":
        """Return a validated copy with ``changes`` applied (field names, not aliases)."""
        return ProspectParams.model_validate({**self.model_dump(), **changes})


class SweepSpec(BaseModel):
    """A one-dimensional parameter sweep."""

    model_config = ConfigDict(extra="forbid")

    parameter: SweepParameter
    values: list[float] = Field(min_length=1)

    def apply(
        self, vendor: ProspectParams, attacker: ProspectParams, value: float
    ) -> tuple[ProspectParams, ProspectParams]:
        """Return the player parameters at one sweep point."""
        match self.parameter:
            case "gamma":
                return vendor.with_values(gamma=value), attacker.with_values(gamma=value)
            case "gamma_vendor":
                return vendor.with_values(gamma=value), attacker
            case "gamma_attacker":
                return vendor, attacker.with_values(gamma=value)
            case "lambda_vendor":
                return vendor.with_values(loss_multiplier=value), attacker
            case "lambda_attacker":
                return vendor, attacker.with_values(loss_multiplier=value)
            case "reference":
                return vendor.with_values(reference=value), attacker.with_values(reference=value)
        raise ValueError(f"Unknown sweep parameter: {self.parameter}")


class ExperimentConfig(BaseModel):
    """What to solve, with which parameters, and where to write the results."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    graph: str = "builtin:paper"
    mode: Literal["eut", "pt", "both"] = "both"
    vendor: ProspectParams = Field(default_factory=ProspectParams)
    attacker: ProspectParams = Field(default_factory=ProspectParams)
    sweep: SweepSpec | None = None
    output_dir: Path = Path(OUTPUT_DIR)
    # Reserved for stochastic extensions; every current stage is deterministic.
    seed: int = 0
    workers: int = Field(SWEEP_WORKERS, ge=0)

    @model_validator(mode="after")
    def _check_sweep_domain(self) -> "ExperimentConfig":
        if self.sweep is not None:
            for value in self.sweep.values:
                self.sweep.apply(self.vendor, self.attacker, value)
        return self
