"""Pydantic models for the security graph JSON document."""

from typing import Annotated

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field


def _as_node_id(value: object) -> object:
    # Documents commonly number their nodes; ids are opaque strings internally.
    if isinstance(value, bool):
        return value
    if isinstance(value, int | float):
        return str(int(value)) if float(value).is_integer() else str(value)
    return value


NodeId = Annotated[str, BeforeValidator(_as_node_id)]


class NodeEntry(BaseModel):
    """A danger point with its attack success probability."""

    id: NodeId
    p: float = Field(allow_inf_nan=False)


class EdgeEntry(BaseModel):
    """A directed edge with its travel time in minutes."""

    model_config = ConfigDict(populate_by_name=True)

    source: NodeId = Field(alias="from")
    target: NodeId = Field(alias="to")
    t: float = Field(allow_inf_nan=False)


class GraphDocument(BaseModel):
    """Top-level graph document: ``nodes``, ``edges``, ``origin``, ``destination``."""

    nodes: list[NodeEntry]
    edges: list[EdgeEntry]
    origin: NodeId
    destination: NodeId
