from RQMC.core.PhysicalParams import PhysicalParams, natural_params, alpha
from RQMC.core.StateSpec import StateSpec, SystemKind, Branch
from RQMC.core.UnitSystem import UnitSystem, UnitMode
from RQMC.core.Errors import (
    ErrorCode,
    ErrorPayload,
    RQMCError,
    ConfigurationError,
    NumericalError,
    RootFindingError,
    QuadratureError,
    SingularParameterError,
    DomainError,
)

__all__ = [
    "PhysicalParams",
    "natural_params",
    "alpha",
    "StateSpec",
    "SystemKind",
    "Branch",
    "UnitSystem",
    "UnitMode",
    "ErrorCode",
    "ErrorPayload",
    "RQMCError",
    "ConfigurationError",
    "NumericalError",
    "RootFindingError",
    "QuadratureError",
    "SingularParameterError",
    "DomainError",
]
