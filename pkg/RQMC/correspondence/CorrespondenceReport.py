from typing import Optional
from pydantic import BaseModel, ConfigDict, Field, model_validator

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import SystemKind, Branch
from RQMC.correspondence.EnergyFixing import TargetMode
from RQMC.correspondence.WindowPolicy import WindowPolicy


class ReportEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    distance: float = Field(..., ge=0, description="Coarse L1 distance to the classical target")
    residual: Optional[float] = Field(
        None, ge=0, description="Coarse L1 distance to the arcsine at kappa (oscillators)"
    )
    S: Optional[float] = Field(None, gt=0, description="Action S_n (oscillators)")
    window: float = Field(..., gt=0, description="Coarse-graining width used")


class CorrespondenceReport(BaseModel):
    """
    Result of a convergence study. exponent is the least-squares slope of log(residual)
    against log(S_n) for oscillators and of log(distance) against log(n) for boxes;
    None when a logarithm is undefined.
    """

    model_config = ConfigDict(frozen=True)

    system: SystemKind
    branch: Branch
    target: TargetMode
    params: PhysicalParams
    entries: list[ReportEntry]
    exponent: Optional[float] = None
    exponent_stderr: Optional[float] = None
    monotone: bool
    window_policy: WindowPolicy

    @model_validator(mode="after")
    def check_entries(self):
        ns = [entry.n for entry in self.entries]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError("report entries must have strictly increasing n")
        return self

    @property
    def distances(self) -> list[float]:
        return [entry.distance for entry in self.entries]

    @property
    def residuals(self) -> list[Optional[float]]:
        return [entry.residual for entry in self.entries]


class ResidualScaling(BaseModel):
    """
    Empirical check of the correction series: how the oscillation residual falls with S_n.
    No pass/fail is attached to the slope.
    """

    model_config = ConfigDict(frozen=True)

    system: SystemKind
    n_values: list[int]
    residuals: list[float]
    actions: list[float]
    exponent: Optional[float] = None
    exponent_stderr: Optional[float] = None
