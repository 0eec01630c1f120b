from pydantic import BaseModel, Field
from typing import Any, Optional
from enum import IntEnum


class ErrorCode(IntEnum):
    """Error codes; these double as the CLI exit codes."""

    NUMERICAL_FAILURE = 1  # A computation did not converge or hit a singular point
    CONFIGURATION_ERROR = 2  # Parameters, state or run configuration are invalid


class ErrorPayload(BaseModel):
    """Structured description of a failure, emitted by the CLI on stderr."""

    code: int = Field(..., description="The error type that occurred")
    error: str = Field(..., description="Exception class name")
    message: str = Field(..., description="A short description of the error")
    data: Optional[Any] = Field(
        None, description="Additional information about the error"
    )


class RQMCError(Exception):
    """
    Base exception class for the package.

    Carries a code so that the CLI can turn any failure into the right exit status.
    """

    def __init__(self, code: int, message: str, data: Any = None):
        self.code = code
        self.message = message
        self.data = data
        super().__init__(message)

    def to_payload(self) -> ErrorPayload:
        """Convert the error to a serializable payload."""
        return ErrorPayload(
            code=int(self.code),
            error=type(self).__name__,
            message=self.message,
            data=self.data,
        )


class ConfigurationError(RQMCError):
    """Invalid physical parameters, state, grid, window or run configuration."""

    def __init__(self, message: str = "Invalid configuration", data: Any = None):
        super().__init__(ErrorCode.CONFIGURATION_ERROR, message, data)


class NumericalError(RQMCError):
    """Generic numerical failure."""

    def __init__(self, message: str = "Numerical failure", data: Any = None):
        super().__init__(ErrorCode.NUMERICAL_FAILURE, message, data)


class RootFindingError(NumericalError):
    """Bracketed root search did not converge."""

    def __init__(self, message: str = "Root finding did not converge", data: Any = None):
        super().__init__(message, data)


class QuadratureError(NumericalError):
    """Adaptive quadrature did not converge."""

    def __init__(self, message: str = "Quadrature did not converge", data: Any = None):
        super().__init__(message, data)


class SingularParameterError(NumericalError):
    """A closed form is singular at the requested point (e.g. Phi_k = 1)."""

    def __init__(self, message: str = "Singular parameter", data: Any = None):
        super().__init__(message, data)


class DomainError(NumericalError):
    """Evaluation outside the domain of a formula."""

    def __init__(self, message: str = "Argument outside domain", data: Any = None):
        super().__init__(message, data)
