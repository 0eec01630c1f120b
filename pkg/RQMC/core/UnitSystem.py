from enum import Enum
from pydantic import BaseModel, ConfigDict, ValidationError
from RQMC.core.PhysicalParams import PhysicalParams, natural_params
from RQMC.core.Errors import ConfigurationError
from RQMC.logs.logging_config import get_logger

logger = get_logger(__name__)


class UnitMode(str, Enum):
    NATURAL = "natural"
    CUSTOM = "custom"

    def __str__(self) -> str:
        return self.value


class UnitSystem(BaseModel):
    """
    natural: m = omega = hbar = c = L = 1, no overrides accepted.
    custom: start from the natural values and override any subset.
    """

    model_config = ConfigDict(frozen=True)

    mode: UnitMode = UnitMode.NATURAL

    def resolve(self, **overrides: float | None) -> PhysicalParams:
        """
        Build the PhysicalParams for this unit system.

        Args:
            overrides: any of mass, omega, length, hbar, c; None values are ignored

        Returns:
            PhysicalParams
        """
        given = {key: value for key, value in overrides.items() if value is not None}
        if self.mode is UnitMode.NATURAL:
            if given:
                raise ConfigurationError(
                    "Natural units fix every parameter; use custom units to override",
                    data=sorted(given),
                )
            return natural_params()
        unknown = set(given) - set(PhysicalParams.model_fields)
        if unknown:
            raise ConfigurationError("Unknown physical parameters", data=sorted(unknown))
        try:
            params = PhysicalParams(**given)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid physical parameters: {e}") from e
        logger.debug(f"Resolved custom units: {params!r}")
        return params
