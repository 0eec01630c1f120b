import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import StateSpec, SystemKind
from RQMC.spectra.Oscillator import oscillator_kappa
from RQMC.spectra.DiracBox import dirac_box_root


class WindowKind(str, Enum):
    DEFAULT = "default"
    FIXED = "fixed"

    def __str__(self) -> str:
        return self.value


class WindowPolicy(BaseModel):
    """
    Coarse-graining width per state.

    default: kappa_n / sqrt(n) for oscillators, two periods of the density oscillation
    for boxes (2L/n for kg-box, 2 pi / k for dirac-box); multiplied by scale.
    fixed: the given width, multiplied by scale.
    """

    model_config = ConfigDict(frozen=True)

    kind: WindowKind = WindowKind.DEFAULT
    scale: float = Field(1.0, gt=0)
    width: Optional[float] = Field(None, gt=0)

    @model_validator(mode="after")
    def check_width(self):
        if self.kind is WindowKind.FIXED and self.width is None:
            raise ValueError("fixed window policy needs a width")
        return self

    def width_for(self, state: StateSpec, params: PhysicalParams) -> float:
        if self.kind is WindowKind.FIXED:
            return self.scale * self.width
        match state.system:
            case SystemKind.KG_OSCILLATOR | SystemKind.DIRAC_OSCILLATOR:
                base = oscillator_kappa(state.n, params, state.system) / math.sqrt(
                    max(state.n, 1)
                )
            case SystemKind.KG_BOX:
                base = 2.0 * params.length / state.n
            case SystemKind.DIRAC_BOX:
                base = 2.0 * math.pi / dirac_box_root(state.n, params)
        return self.scale * base

    def describe(self) -> dict:
        return {"kind": str(self.kind), "scale": self.scale, "width": self.width}
