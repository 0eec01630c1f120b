"""
Classical single-particle position distributions: the arcsine law of the harmonic
oscillator and the uniform law of the box.
"""

import math
from enum import Enum
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field, model_validator

from RQMC.core.Errors import ConfigurationError, DomainError
from RQMC.densities.DensityCurve import DensityCurve, CurveKind


class ClassicalKind(str, Enum):
    ARCSINE = "arcsine"
    UNIFORM = "uniform"

    def __str__(self) -> str:
        return self.value


def classical_oscillator_density(x0: float, x: ArrayLike) -> np.ndarray | float:
    """
    1 / (pi sqrt(x0^2 - x^2)) inside the turning points, 0 outside.

    Raises:
        DomainError: x sits exactly on a turning point
    """
    if not x0 > 0:
        raise ConfigurationError("Classical amplitude must be positive", data=x0)
    x_arr = np.asarray(x, dtype=float)
    if np.any(np.abs(x_arr) == x0):
        raise DomainError("Arcsine density is singular at the turning points", data=x0)
    inside = np.abs(x_arr) < x0
    with np.errstate(invalid="ignore", divide="ignore"):
        values = np.where(inside, 1.0 / (math.pi * np.sqrt(x0**2 - x_arr**2)), 0.0)
    return float(values) if np.ndim(x) == 0 else values


def classical_box_density(length: float, x: ArrayLike) -> np.ndarray | float:
    """1/L on [0, L] (walls included), 0 outside."""
    if not length > 0:
        raise ConfigurationError("Box length must be positive", data=length)
    x_arr = np.asarray(x, dtype=float)
    values = np.where((x_arr >= 0.0) & (x_arr <= length), 1.0 / length, 0.0)
    return float(values) if np.ndim(x) == 0 else values


class ClassicalDensity(BaseModel):
    """
    A classical target. Arcsine laws carry x0, uniform laws carry the box length.
    """

    model_config = ConfigDict(frozen=True)

    kind: ClassicalKind
    x0: Optional[float] = Field(None, gt=0, description="Oscillator amplitude")
    length: Optional[float] = Field(None, gt=0, description="Box length")

    @model_validator(mode="after")
    def check_scale(self):
        if self.kind is ClassicalKind.ARCSINE and self.x0 is None:
            raise ValueError("arcsine law needs x0")
        if self.kind is ClassicalKind.UNIFORM and self.length is None:
            raise ValueError("uniform law needs a length")
        return self

    @classmethod
    def arcsine(cls, x0: float) -> "ClassicalDensity":
        return cls(kind=ClassicalKind.ARCSINE, x0=x0)

    @classmethod
    def uniform(cls, length: float) -> "ClassicalDensity":
        return cls(kind=ClassicalKind.UNIFORM, length=length)

    @property
    def support(self) -> tuple[float, float]:
        if self.kind is ClassicalKind.ARCSINE:
            return -self.x0, self.x0
        return 0.0, self.length

    def pdf(self, x: ArrayLike) -> np.ndarray | float:
        if self.kind is ClassicalKind.ARCSINE:
            return classical_oscillator_density(self.x0, x)
        return classical_box_density(self.length, x)

    def cdf(self, x: ArrayLike) -> np.ndarray | float:
        x_arr = np.asarray(x, dtype=float)
        if self.kind is ClassicalKind.ARCSINE:
            values = 0.5 + np.arcsin(np.clip(x_arr / self.x0, -1.0, 1.0)) / math.pi
        else:
            values = np.clip(x_arr / self.length, 0.0, 1.0)
        return float(values) if np.ndim(x) == 0 else values

    def coarse_curve(self, grid: ArrayLike, window: float) -> DensityCurve:
        """
        Exact boxcar average of width `window` on the grid.

        The arcsine average is a CDF difference and is finite everywhere. The uniform law
        is reflected at its walls, so its average is 1/L on [0, L] and 0 outside.
        """
        grid = np.asarray(grid, dtype=float)
        if not window > 0:
            raise ConfigurationError("Window must be positive", data=window)
        if self.kind is ClassicalKind.ARCSINE:
            half = 0.5 * window
            values = (self.cdf(grid + half) - self.cdf(grid - half)) / window
            support = None
        else:
            values = classical_box_density(self.length, grid)
            support = (0.0, self.length)
        return DensityCurve(
            grid=grid,
            values=values,
            norm_target=1.0,
            kind=CurveKind.CLASSICAL,
            support=support,
            window=window,
        )

    def __repr__(self):
        if self.kind is ClassicalKind.ARCSINE:
            return f"<ClassicalDensity arcsine x0={self.x0:.6g}>"
        return f"<ClassicalDensity uniform L={self.length:.6g}>"
