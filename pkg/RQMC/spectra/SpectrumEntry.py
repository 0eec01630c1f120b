from typing import Optional
from pydantic import BaseModel, ConfigDict, Field, model_validator
from RQMC.core.StateSpec import StateSpec


class SpectrumEntry(BaseModel):
    """
    One level of a spectrum with its derived parameters.
    Oscillators fill kappa and action; kg-box fills k; dirac-box fills k, phi, delta,
    b_squared and residual.
    """

    model_config = ConfigDict(frozen=True)

    state: StateSpec
    energy: float = Field(..., description="E, signed by branch")
    kappa: Optional[float] = Field(None, gt=0, description="kappa_n (length)")
    action: Optional[float] = Field(None, gt=0, description="S_n (action)")
    k: Optional[float] = Field(None, gt=0, description="wave number (1/length)")
    phi: Optional[float] = Field(None, ge=0, description="Phi_k (dimensionless)")
    delta: Optional[float] = Field(None, description="delta_k (radians)")
    b_squared: Optional[float] = Field(None, gt=0, description="|B_k|^2 (1/length)")
    residual: Optional[float] = Field(
        None, ge=0, description="|tan(kL) + hbar k/(mc)| at the root"
    )

    @model_validator(mode="after")
    def check_branch_sign(self):
        if self.energy * self.state.branch.sign <= 0:
            raise ValueError(
                f"Energy {self.energy} does not carry the sign of the {self.state.branch} branch"
            )
        return self
