from RQMC.cli.CommandRegistry import Command, CommandRegistry, registry
from RQMC.cli.RunConfig import RunConfig, OutputFormat, DensityForm, parse_system

__all__ = [
    "Command",
    "CommandRegistry",
    "registry",
    "RunConfig",
    "OutputFormat",
    "DensityForm",
    "parse_system",
]
