from enum import Enum
from pydantic import BaseModel, ConfigDict, Field


class TransformSource(str, Enum):
    ANALYTIC = "analytic"
    NUMERIC = "numeric-oracle"
    ASYMPTOTIC = "asymptotic"

    def __str__(self) -> str:
        return self.value


class TransformSample(BaseModel):
    """
    f(p) = int rho(x) exp(-i p x / hbar) dx at one momentum, tagged with how it was obtained.
    """

    model_config = ConfigDict(frozen=True)

    p: float = Field(..., description="Momentum")
    real: float
    imag: float = 0.0
    source: TransformSource

    @property
    def value(self) -> complex:
        return complex(self.real, self.imag)

    @classmethod
    def of(cls, p: float, value: complex, source: TransformSource) -> "TransformSample":
        value = complex(value)
        return cls(p=p, real=value.real, imag=value.imag, source=source)
