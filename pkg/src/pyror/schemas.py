"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field


class ProblemRequest(BaseModel):
    n: int
    criteria: list[dict[str, Any]]
    alternatives: dict[str, dict[str, Any]]
    reference: list[str] | None = None
    sorting: dict[str, Any] | None = None


class SessionSummary(BaseModel):
    id: str
    version: int
    n: int
    alternatives: list[str]
    criteria: list[str]
    reference: list[str]
    compatible: bool
    epsilon: float | None
    statements: list[dict[str, Any]]
    sorting: dict[str, Any] | None = None


class StatementIn(BaseModel):
    kind: str
    alternatives: list[str]
    criterion: str | None = None
    credibility: int = Field(default=1, ge=1)
    author: str = "dm"


class AddStatementResponse(BaseModel):
    version: int
    compatible: bool
    epsilon: float | None


class RevertRequest(BaseModel):
    version: int


class RevertResponse(BaseModel):
    version: int


class MatrixResponse(BaseModel):
    kind: str
    order: list[str]
    bits: list[list[bool]]
    boundary: list[list[str]] = []


class HasseResponse(BaseModel):
    kind: str
    nodes: list[list[str]]
    arcs: list[list[int]]


class SweepLevel(BaseModel):
    level: int
    epsilon: float | None
    necessary: MatrixResponse | None = None
    possible: MatrixResponse | None = None


class SweepResponse(BaseModel):
    levels: list[SweepLevel]
    incompatible_from: int | None = None


class SortingAssignment(BaseModel):
    possible: list[int]
    necessary: list[int] | None = None


class SortingResponse(BaseModel):
    classes: list[str]
    compatible: bool
    epsilon: float | None
    assignments: dict[str, SortingAssignment]


class SortingSpecIn(BaseModel):
    classes: list[str]
    examples: list[dict[str, Any]] = []


class RankEntry(BaseModel):
    best: int
    worst: int


class ExtremeRanksResponse(BaseModel):
    index: str
    ranks: dict[str, RankEntry]


class DiagnoseResponse(BaseModel):
    compatible: bool
    minimal_sets: list[list[int]]
    exhaustive: bool
    statements: list[str]


class ErrorBody(BaseModel):
    code: str
    message: str
    details: Any = None
