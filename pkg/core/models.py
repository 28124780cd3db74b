"""
Pydantic models for every JSON document the toolkit emits.
"""

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class SearchCertificate(BaseModel):
    mode: Literal["exhaustive", "sampled"]
    witness: Optional[list[int]] = None
    nodes: int
    trials: Optional[int] = None


class Budget(BaseModel):
    """Vertices used, red edges and total edges of a game."""

    model_config = ConfigDict(frozen=True)

    v: int = Field(ge=0)
    r: int = Field(ge=0)
    m: int = Field(ge=0)

    def within(self, other: "Budget") -> bool:
        return self.v <= other.v and self.r <= other.r and self.m <= other.m


class Move(BaseModel):
    op: Literal["vertex", "edge"]
    u: Optional[int] = None
    v: Optional[int] = None
    color: Optional[Literal["r", "b"]] = None


class Outcome(BaseModel):
    kind: Literal["red", "blue", "exhausted", "aborted"]
    witness: list[int] = []


class GameTranscript(BaseModel):
    target: list[int]
    moves: list[Move]
    outcome: Outcome
    budget: Budget

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True)


class TraceStep(BaseModel):
    """One extracted vertex of an extraction run."""

    vertex: int
    survivors: int
    red_edges: int
    edges: int
    red_fractions: list[float] = []
    bound_log2: Optional[float] = None


class ExtractionReport(BaseModel):
    config: dict[str, Any]
    outcome: Literal["red", "blue", "red-k4-minus-edge", "failure"]
    witness: list[int]
    verified: bool
    trace: list[TraceStep]
    red_graph: list[list[int]] = []
    blue_graph: list[list[int]] = []
    bound: Optional[int] = None
    bound_log2: float


class CheckResult(BaseModel):
    name: str
    passed: bool
    details: dict[str, Any] = {}
    witness: Optional[dict[str, Any]] = None


class RunConfig(BaseModel):
    subcommand: str
    seed: int = Field(ge=0, lt=1 << 64)
    format: Literal["json", "csv", "text", "parquet"] = "json"
    node_cap: Optional[int] = Field(default=None, gt=0)
    time_cap: Optional[float] = Field(default=None, gt=0)
    out: Optional[str] = None
    paths: dict[str, str] = {}
