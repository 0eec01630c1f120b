"""
Dimensional context of every computation: m, omega, L, hbar, c.
Natural units (all ones) are the default.
"""

from pydantic import BaseModel, ConfigDict, Field
from RQMC.core.Errors import ConfigurationError


class PhysicalParams(BaseModel):
    """
    Immutable set of physical constants for one run.
    omega only matters for the oscillators and length only for the boxes, but every field
    is kept strictly positive so a single object can describe any system.
    """

    model_config = ConfigDict(frozen=True)

    mass: float = Field(default=1.0, gt=0, allow_inf_nan=False, description="m")
    omega: float = Field(default=1.0, gt=0, allow_inf_nan=False, description="omega")
    length: float = Field(default=1.0, gt=0, allow_inf_nan=False, description="L")
    hbar: float = Field(default=1.0, gt=0, allow_inf_nan=False, description="hbar")
    c: float = Field(default=1.0, gt=0, allow_inf_nan=False, description="c")

    @property
    def rest_energy(self) -> float:
        """mc^2"""
        return self.mass * self.c**2

    @property
    def rest_momentum(self) -> float:
        """mc"""
        return self.mass * self.c

    def __repr__(self):
        return (
            f"<PhysicalParams m={self.mass} omega={self.omega} L={self.length} "
            f"hbar={self.hbar} c={self.c}>"
        )


def natural_params() -> PhysicalParams:
    """m = omega = hbar = c = L = 1."""
    return PhysicalParams()


def alpha(params: PhysicalParams) -> float:
    """
    alpha = m*omega/hbar, the inverse squared oscillator length.
    """
    value = params.mass * params.omega / params.hbar
    if not value > 0:
        raise ConfigurationError("alpha must be strictly positive", data=value)
    return value
