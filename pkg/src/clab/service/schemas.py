"""Pydantic request/response models shared by the HTTP API and the CLI."""
from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field

from ..graphs import Graph, build_graph


class GraphModel(BaseModel):
    """The JSON graph document; unknown keys are rejected."""
    model_config = ConfigDict(extra="forbid")

    name: str = "G"
    vertices: list[str]
    edges: list[tuple[str, str]] = Field(default_factory=list)
    lists: dict[str, list[int]] | None = None
    b: int | None = Field(default=None, ge=1)
    rotation: dict[str, list[str]] | None = None

    def to_graph(self) -> Graph:
        g = build_graph(self.vertices, self.edges, name=self.name)
        if self.rotation is not None:
            g = g.with_rotation({v: tuple(c) for v, c in self.rotation.items()})
        return g

    def colour_lists(self) -> dict[str, frozenset] | None:
        if self.lists is None:
            return None
        for v, cs in self.lists.items():
            if any(c < 0 for c in cs):
                raise ValueError(f"list of {v!r} holds a negative colour")
        return {v: frozenset(cs) for v, cs in self.lists.items()}


class BudgetModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    max_nodes: int = Field(default=100_000_000, ge=1)
    max_seconds: float = Field(default=300.0, gt=0)


class GadgetRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    m: int = Field(ge=1)
    format: Literal["json", "dot"] = "json"


class SolveRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphModel
    b: int | None = Field(default=None, ge=1)
    palette: int | None = Field(default=None, ge=1)
    budget: BudgetModel = Field(default_factory=BudgetModel)


class EncodeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphModel
    b: int | None = Field(default=None, ge=1)


class LemmaRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    m: int = Field(ge=1)
    method: Literal["dfs", "replay", "both"] = "both"
    budget: BudgetModel = Field(default_factory=BudgetModel)
    parallel: int = Field(default=1, ge=1)
    trace_limit: int = Field(default=8, ge=0)


class TheoremRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    m: int = Field(ge=1)
    whole_graph: bool = False
    parallel: int = Field(default=1, ge=1)
    budget: BudgetModel = Field(default_factory=BudgetModel)
    cap: int = Field(default=10_000, ge=3)


class ArithmeticRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    max_m: int = Field(ge=1)


class WitnessRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphModel
    a: int = Field(ge=1)
    b: int = Field(default=1, ge=1)
    universe: int | None = Field(default=None, ge=1)
    budget: BudgetModel = Field(
        default_factory=lambda: BudgetModel(max_nodes=1_000_000))


class ChiFRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphModel
    max_b: int = Field(default=3, ge=1)


class DotRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphModel


class Report(BaseModel):
    """Uniform response envelope: one JSON document per request."""
    command: str
    inputs: dict[str, Any]
    verdict: str
    details: dict[str, Any]
    timing: dict[str, float]
