"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

AlgorithmName = Literal[
    "enum-mib", "oct-mib2", "mica", "oct-mica", "oracle-mib", "oracle-mb"
]


class GenerateRequest(BaseModel):
    n_l: int = Field(ge=0)
    n_r: int = Field(ge=0)
    n_o: int = Field(ge=0)
    d_lr: float = Field(ge=0.0, le=1.0)
    d_cross: float = Field(ge=0.0, le=1.0)
    d_o: float = Field(ge=0.0, le=1.0)
    cv_lr: float = Field(ge=0.0)
    cv_cross: float = Field(ge=0.0)
    seed: int = 0


class RealizedStatsModel(BaseModel):
    d_lr: float
    d_cross: float
    d_o: float
    cv_lr: float
    cv_cross: float


class GenerateResponse(BaseModel):
    n: int
    m: int
    graph_text: str
    oct_text: str
    stats: RealizedStatsModel


class EnumerateRequest(BaseModel):
    graph_text: str
    algorithm: AlgorithmName
    oct_text: Optional[str] = None
    oct_heuristic: bool = False
    oct_seed: int = 0
    timeout_s: Optional[float] = Field(default=None, gt=0.0)
    list_bicliques: bool = False
    count_only: bool = False


class EnumerateResponse(BaseModel):
    algorithm: str
    count: int
    wall_time_s: float
    timed_out: bool
    oct_time_s: Optional[float] = None
    n_o: Optional[int] = None
    bicliques: Optional[list[str]] = None


class BenchRequest(BaseModel):
    n_l: int = Field(ge=0)
    n_r: int = Field(ge=0)
    n_o: int = Field(ge=0)
    d_lr: float = Field(ge=0.0, le=1.0)
    d_cross: float = Field(ge=0.0, le=1.0)
    d_o: float = Field(ge=0.0, le=1.0)
    cv: float = Field(ge=0.0)
    vary: Literal["n_l", "n_r", "n_o", "d_lr", "d_cross", "d_o", "cv"]
    values: list[float] = Field(min_length=1)
    seeds: list[int] = Field(min_length=1)
    algorithms: list[AlgorithmName] = Field(min_length=1)
    timeout_s: Optional[float] = Field(default=None, gt=0.0)


class ValidateOctRequest(BaseModel):
    graph_text: str
    oct_text: str


class ValidateOctResponse(BaseModel):
    valid: bool
    violations: list[tuple[int, int]]
