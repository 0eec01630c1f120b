"""
Registry of CLI sub-commands, filled by decorator.

    registry = CommandRegistry()

    @registry.command
    def cmd_spectrum(config: RunConfig) -> str:
        "Energy levels and derived parameters."
        ...

name = "spectrum" (function name without the cmd_ prefix)
description = the docstring, used as the sub-command help
"""

from typing import Callable
from pydantic import BaseModel, Field

from RQMC.core.Errors import ConfigurationError
from RQMC.logs.logging_config import get_logger

logger = get_logger(__name__)

PREFIX = "cmd_"


class Command(BaseModel):
    """
    A sub-command: a function taking a RunConfig and returning the rendered payload.
    The function must be named and have a docstring.
    """

    function: Callable
    name: str = Field(default="")
    description: str = Field(default="")

    def model_post_init(self, __context) -> None:
        self.name = self._get_name()
        self.description = self._get_description()

    def _get_name(self) -> str:
        try:
            name = self.function.__name__
        except AttributeError:
            raise ValueError("Command function needs a name.")
        if name == "<lambda>":
            raise ValueError("Command function needs a name, not a lambda.")
        return name.removeprefix(PREFIX).replace("_", "-")

    def _get_description(self) -> str:
        doc = self.function.__doc__
        if not doc or not doc.strip():
            raise ValueError(f"Command {self.function.__name__} needs a docstring.")
        return doc.strip()

    @property
    def summary(self) -> str:
        """First line of the docstring."""
        return self.description.splitlines()[0]


class CommandRegistry(BaseModel):
    commands: dict[str, Command] = Field(default_factory=dict)

    def command(self, func: Callable) -> Callable:
        """
        Decorator to register a sub-command.
        """
        command = Command(function=func)
        if command.name in self.commands:
            raise ValueError(f"Command {command.name} registered twice.")
        self.commands[command.name] = command
        logger.debug(f"Registered command {command.name}")
        return func

    def get(self, name: str) -> Command:
        try:
            return self.commands[name]
        except KeyError:
            raise ConfigurationError(f"Unknown command: {name}", data=sorted(self.commands))

    @property
    def names(self) -> list[str]:
        return list(self.commands)


registry = CommandRegistry()
