from enum import Enum
from pydantic import BaseModel, ConfigDict, Field, model_validator


class SystemKind(str, Enum):
    """
    The four exactly solvable systems.
    """

    KG_OSCILLATOR = "kg-oscillator"
    KG_BOX = "kg-box"
    DIRAC_OSCILLATOR = "dirac-oscillator"
    DIRAC_BOX = "dirac-box"

    # Serialize as the plain string value
    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return repr(self.value)

    @property
    def is_oscillator(self) -> bool:
        return self in (SystemKind.KG_OSCILLATOR, SystemKind.DIRAC_OSCILLATOR)

    @property
    def is_box(self) -> bool:
        return not self.is_oscillator

    @property
    def is_klein_gordon(self) -> bool:
        return self in (SystemKind.KG_OSCILLATOR, SystemKind.KG_BOX)

    @property
    def is_dirac(self) -> bool:
        return not self.is_klein_gordon

    @property
    def minimum_n(self) -> int:
        return 0 if self.is_oscillator else 1


class Branch(str, Enum):
    PARTICLE = "particle"
    ANTIPARTICLE = "antiparticle"

    def __str__(self) -> str:
        return self.value

    @property
    def sign(self) -> int:
        return 1 if self is Branch.PARTICLE else -1

    @property
    def opposite(self) -> "Branch":
        return Branch.ANTIPARTICLE if self is Branch.PARTICLE else Branch.PARTICLE


class StateSpec(BaseModel):
    """
    Which system, which level, which branch.
    For dirac-box, n is the index j of the root of the quantization condition.
    Spin is not a field: spin up and spin down give the same density.
    """

    model_config = ConfigDict(frozen=True)

    system: SystemKind
    n: int = Field(..., ge=0)
    branch: Branch = Branch.PARTICLE

    @model_validator(mode="after")
    def check_minimum_n(self):
        if self.n < self.system.minimum_n:
            raise ValueError(
                f"{self.system} requires n >= {self.system.minimum_n}, got {self.n}"
            )
        return self

    def with_n(self, n: int) -> "StateSpec":
        return StateSpec(system=self.system, n=n, branch=self.branch)

    def __repr__(self):
        return f"<State {self.system} n={self.n} {self.branch}>"
