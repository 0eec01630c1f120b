"""
Validated configuration of one CLI run. Every check happens here, before any computation.
"""

from argparse import Namespace
from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import StateSpec, SystemKind, Branch
from RQMC.core.UnitSystem import UnitSystem, UnitMode
from RQMC.core.Errors import ConfigurationError
from RQMC.densities.DensityCurve import GridSpec
from RQMC.correspondence.EnergyFixing import TargetMode
from RQMC.correspondence.WindowPolicy import WindowPolicy, WindowKind

# Short names accepted on the command line
SYSTEM_ALIASES: dict[str, SystemKind] = {
    "kg-osc": SystemKind.KG_OSCILLATOR,
    "kg-box": SystemKind.KG_BOX,
    "dirac-osc": SystemKind.DIRAC_OSCILLATOR,
    "dirac-box": SystemKind.DIRAC_BOX,
}

DEFAULT_N_LIST = [10, 20, 40, 80, 160]
DEFAULT_LEVELS = 5


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"

    def __str__(self) -> str:
        return self.value


class DensityForm(str, Enum):
    EXACT = "exact"
    ASYMPTOTIC = "asymptotic"

    def __str__(self) -> str:
        return self.value


# Commands that emit JSON unless told otherwise
_JSON_BY_DEFAULT = {"converge"}


def parse_system(name: str) -> SystemKind:
    if name in SYSTEM_ALIASES:
        return SYSTEM_ALIASES[name]
    try:
        return SystemKind(name)
    except ValueError:
        raise ConfigurationError(f"Unknown system: {name}", data=sorted(SYSTEM_ALIASES))


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: str
    system: SystemKind
    n: Optional[int] = None
    n_values: list[int] = Field(default_factory=lambda: list(DEFAULT_N_LIST))
    n_max: Optional[int] = None
    count: Optional[int] = Field(None, ge=1)
    branch: Branch = Branch.PARTICLE
    units: UnitSystem = UnitSystem()
    params: PhysicalParams = PhysicalParams()
    grid: GridSpec = GridSpec()
    p_max: float = Field(5.0, gt=0)
    p_points: int = Field(51, ge=2)
    window: WindowPolicy = WindowPolicy()
    target: TargetMode = TargetMode.KAPPA
    form: DensityForm = DensityForm.EXACT
    output_format: OutputFormat = OutputFormat.CSV
    output: Optional[Path] = None

    @model_validator(mode="after")
    def check_command_inputs(self):
        if self.grid.points < 2:
            raise ValueError("grid needs at least 2 points")
        match self.command:
            case "density" | "ft":
                if self.n is None:
                    raise ValueError(f"{self.command} needs --n")
                StateSpec(system=self.system, n=self.n, branch=self.branch)
            case "converge":
                if len(self.n_values) < 3:
                    raise ValueError("converge needs at least three levels")
                if any(b <= a for a, b in zip(self.n_values, self.n_values[1:])):
                    raise ValueError("--n-list must be strictly increasing")
                for n in self.n_values:
                    StateSpec(system=self.system, n=n, branch=self.branch)
            case "spectrum":
                if self.n_max is not None and self.n_max < self.system.minimum_n:
                    raise ValueError(f"--n-max below the lowest {self.system} level")
        return self

    def state(self) -> StateSpec:
        return StateSpec(system=self.system, n=self.n, branch=self.branch)

    def spectrum_levels(self) -> list[int]:
        """--count levels from the lowest, else up to --n-max, else the first five."""
        lowest = self.system.minimum_n
        if self.count is not None:
            return list(range(lowest, lowest + self.count))
        if self.n_max is not None:
            return list(range(lowest, self.n_max + 1))
        return list(range(lowest, lowest + DEFAULT_LEVELS))

    @classmethod
    def from_namespace(cls, args: Namespace) -> "RunConfig":
        """
        Build from parsed flags; any invalid value becomes a ConfigurationError.
        """
        try:
            units = UnitSystem(mode=UnitMode(args.units))
            params = units.resolve(
                mass=args.m, omega=args.omega, length=args.L, hbar=args.hbar, c=args.c
            )
            window = WindowPolicy(
                kind=WindowKind(args.window_policy),
                scale=args.window_scale,
                width=args.window,
            )
            fmt = args.format or (
                "json" if args.command in _JSON_BY_DEFAULT else "csv"
            )
            fields = dict(
                command=args.command,
                system=parse_system(args.system),
                branch=Branch(args.branch),
                units=units,
                params=params,
                grid=GridSpec(x_min=args.x_min, x_max=args.x_max, points=args.grid_points),
                window=window,
                output_format=OutputFormat(fmt),
                output=args.output,
            )
            for name in ("n", "n_max", "count", "p_max", "p_points", "target", "form"):
                value = getattr(args, name, None)
                if value is not None:
                    fields[name] = value
            if getattr(args, "n_list", None) is not None:
                fields["n_values"] = args.n_list
            return cls(**fields)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid run configuration: {e}") from e
        except ValueError as e:
            raise ConfigurationError(str(e)) from e
