from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy.integrate import trapezoid

from RQMC.core.StateSpec import StateSpec
from RQMC.core.Errors import ConfigurationError
from RQMC.spectra.SpectrumEntry import SpectrumEntry


class CurveKind(str, Enum):
    EXACT = "exact"
    ASYMPTOTIC = "asymptotic"
    CLASSICAL = "classical"
    COARSE = "coarse"

    def __str__(self) -> str:
        return self.value


class GridSpec(BaseModel):
    """
    Range and point count of a sampling grid. Missing bounds fall back to the
    per-system defaults.
    """

    model_config = ConfigDict(frozen=True)

    x_min: Optional[float] = None
    x_max: Optional[float] = None
    points: int = 2001

    def resolve(self, default_min: float, default_max: float) -> np.ndarray:
        if self.points < 2:
            raise ConfigurationError("A grid needs at least 2 points", data=self.points)
        lower = default_min if self.x_min is None else self.x_min
        upper = default_max if self.x_max is None else self.x_max
        if not upper > lower:
            raise ConfigurationError(
                "Grid upper bound must exceed lower bound", data=[lower, upper]
            )
        return np.linspace(lower, upper, self.points)


class DensityCurve(BaseModel):
    """
    A density sampled on a grid.

    norm_target is the integral the exact density should have: |E|/mc^2 for Klein-Gordon
    states (dilation factor), 1 for Dirac states and classical laws.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: np.ndarray
    values: np.ndarray
    norm_target: float = Field(..., gt=0)
    state: Optional[StateSpec] = None
    energy: Optional[SpectrumEntry] = None
    kind: CurveKind = CurveKind.EXACT
    support: Optional[tuple[float, float]] = Field(
        None, description="Finite support [lower, upper]; None for the real line"
    )
    window: Optional[float] = Field(None, description="Coarse-graining width, if any")

    @field_validator("grid", "values", mode="before")
    @classmethod
    def as_float_array(cls, value):
        array = np.asarray(value, dtype=float)
        if array.ndim != 1:
            raise ValueError("Curves are one-dimensional")
        if not np.all(np.isfinite(array)):
            raise ValueError("Curve samples must be finite")
        return array

    @model_validator(mode="after")
    def check_shape(self):
        if self.grid.size < 2:
            raise ValueError("A curve needs at least 2 samples")
        if self.grid.shape != self.values.shape:
            raise ValueError("grid and values differ in length")
        if np.any(np.diff(self.grid) <= 0):
            raise ValueError("grid must be strictly increasing")
        if np.any(self.values < 0):
            raise ValueError("densities are non-negative")
        return self

    @property
    def spacing(self) -> float:
        """Largest gap between neighbouring samples."""
        return float(np.max(np.diff(self.grid)))

    def integral(self) -> float:
        return float(trapezoid(self.values, self.grid))

    def normalized(self) -> np.ndarray:
        """Values rescaled to unit trapezoid integral."""
        total = self.integral()
        if not total > 0:
            raise ConfigurationError("Cannot normalize a curve with zero integral")
        return self.values / total

    def with_values(self, values: np.ndarray, **updates) -> "DensityCurve":
        fields = {
            "grid": self.grid,
            "values": values,
            "norm_target": self.norm_target,
            "state": self.state,
            "energy": self.energy,
            "kind": self.kind,
            "support": self.support,
            "window": self.window,
        }
        fields.update(updates)
        return DensityCurve(**fields)

    def __repr__(self):
        return (
            f"<DensityCurve {self.kind} state={self.state!r} points={self.grid.size} "
            f"norm_target={self.norm_target:.6g}>"
        )
