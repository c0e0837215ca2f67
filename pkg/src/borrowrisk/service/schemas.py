"""Request/response bodies for the HTTP API."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator


class RiskRequest(BaseModel):
    s: float = Field(gt=0, description="analyst scale; s^2 = 1 + prior variance")
    sigma: float = Field(ge=1, description="nature's marginal sd of the side datum")


class RiskReport(BaseModel):
    s: float
    sigma: float
    risk_marginal: float
    risk_joint: float
    ratio: float
    warning: str | None = None


class SimulateRequest(BaseModel):
    kind: Literal["marginal", "joint"]
    s: float | None = Field(default=None, gt=0)
    sigma: float = Field(ge=1)
    n: int = Field(ge=1, le=1_000_000_000)
    seed: int = Field(default=0, ge=0, lt=2**64)
    workers: int = Field(default=1, ge=1, le=256)

    @model_validator(mode="after")
    def _joint_needs_s(self) -> "SimulateRequest":
        if self.kind == "joint" and self.s is None:
            raise ValueError("kind='joint' requires s")
        return self


class SimulateReport(BaseModel):
    kind: Literal["marginal", "joint"]
    s: float | None
    sigma: float
    n: int
    seed: int
    workers: int
    estimate: float
    std_error: float
    reference: float
    z_score: float
    warning: str | None = None


class SweepRequest(BaseModel):
    sigma: float = Field(ge=1)
    s_min: float = Field(gt=0)
    s_max: float = Field(gt=0)
    points: int = Field(ge=2, le=100_000)
    log_spaced: bool = True

    @model_validator(mode="after")
    def _ordered_grid(self) -> "SweepRequest":
        if not self.s_min < self.s_max:
            raise ValueError("s_min must be strictly less than s_max")
        return self


class SweepRowModel(BaseModel):
    s: float
    risk_joint: float
    risk_marginal: float
    ratio: float


class SweepReport(BaseModel):
    sigma: float
    rows: list[SweepRowModel]
    warning: str | None = None


class FigureRequest(BaseModel):
    """Sweep with presentation defaults and an optional Monte Carlo overlay."""

    sigma: float = Field(default=3.0, ge=1)
    s_min: float = Field(default=1.0, gt=0)
    s_max: float = Field(default=100.0, gt=0)
    points: int = Field(default=200, ge=2, le=100_000)
    log_spaced: bool = True
    with_mc: bool = False
    n: int = Field(default=100_000, ge=1, le=1_000_000_000)
    seed: int = Field(default=0, ge=0, lt=2**64)
    workers: int = Field(default=1, ge=1, le=256)

    @model_validator(mode="after")
    def _ordered_grid(self) -> "FigureRequest":
        if not self.s_min < self.s_max:
            raise ValueError("s_min must be strictly less than s_max")
        return self


class Health(BaseModel):
    status: Literal["ok"]
    version: str
