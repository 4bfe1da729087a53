"""Pydantic request/response models for the HTTP service.

Shapes are validated here; exact-arithmetic semantics (dimension agreement,
subspace constraints, pair composability) are validated by the core parsers,
whose schema errors map to HTTP 400 with the offending field named.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from ..engine.verdicts import ProbeConfig
from ..seeding import DEFAULT_SEED

Category = Literal["FinVectQ", "LatticeZ", "MonoPairsQ"]
SuiteName = Literal["universal", "transport", "axioms", "kelly", "theorem", "structure"]


class MorphismModel(BaseModel):
    category: str
    dom: dict
    cod: dict
    matrix: list

    def doc(self) -> dict:
        return self.model_dump()


class ConfigModel(BaseModel):
    seed: int = DEFAULT_SEED
    samples: int = Field(default=100, ge=0)
    max_dim: int = Field(default=3, ge=1)
    max_entry: int = Field(default=3, ge=1)
    hypothesis_rules: bool = True

    def probe(self) -> ProbeConfig:
        return ProbeConfig(
            seed=self.seed,
            samples=self.samples,
            max_dim=self.max_dim,
            max_entry=self.max_entry,
        )


class MorphismRequest(BaseModel):
    morphism: MorphismModel


class MorphismConfigRequest(BaseModel):
    morphism: MorphismModel
    config: ConfigModel = ConfigModel()


class CospanRequest(BaseModel):
    g: MorphismModel
    t: MorphismModel


class SpanRequest(BaseModel):
    f: MorphismModel
    t: MorphismModel


class PairRequest(BaseModel):
    f: MorphismModel
    g: MorphismModel
    config: ConfigModel = ConfigModel()


class SuiteRequest(BaseModel):
    suite: SuiteName
    category: Category
    config: ConfigModel = ConfigModel()
    workers: int = Field(default=0, ge=0)


class HealthResponse(BaseModel):
    status: str
    version: str
    categories: list[str]


class KernelResponse(BaseModel):
    object: dict
    inclusion: dict


class CokernelResponse(BaseModel):
    object: dict
    projection: dict


class PullbackResponse(BaseModel):
    kind: Literal["pullback"]
    g: dict
    t: dict
    P: dict
    p_Y: dict
    p_T: dict


class PushoutResponse(BaseModel):
    kind: Literal["pushout"]
    f: dict
    t: dict
    S: dict
    s_Y: dict
    s_T: dict


class ProfileResponse(BaseModel):
    mono: bool
    epi: bool
    iso: bool
    is_kernel: bool
    is_cokernel: bool
    strict: bool


class StrictResponse(BaseModel):
    strict: bool
    induced: dict
    coim_projection: dict
    image_inclusion: dict


class VerdictResponse(BaseModel):
    outcome: Literal["yes", "no", "unknown"]
    justification: Optional[str] = None
    witness: Optional[dict] = None
    budget: Optional[int] = None


class SplitResponse(BaseModel):
    split: bool


class ReportResponse(BaseModel):
    suite: str
    instance: str
    config: dict
    cases: int
    violations: list
    witnesses: list
    unknown: int
    counts: dict
    findings: Optional[dict] = None
    aborted: Optional[str] = None


class ErrorResponse(BaseModel):
    error: str
    field: Optional[str] = None
