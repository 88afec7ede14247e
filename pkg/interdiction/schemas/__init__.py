"""Pydantic models for external input documents."""

from interdiction.schemas.experiment import ExperimentConfig, ProspectParams, SweepSpec
from interdiction.schemas.graph_document import EdgeEntry, GraphDocument, NodeEntry

__all__ = [
    "EdgeEntry",
    "ExperimentConfig",
    "GraphDocument",
    "NodeEntry",
    "ProspectParams",
    "SweepSpec",
]
