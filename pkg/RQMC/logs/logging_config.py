"""
Process-wide logging. Records go to stderr through rich (stdout is reserved for result
tables) and optionally to a plain-text file.

    logger = get_logger(__name__)           # in every module
    configure_logging(level="DEBUG")        # once, at startup; the CLI does this
"""

import logging
import os
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

LOG_LEVEL_ENV = "RQMC_LOG_LEVEL"
ROOT_NAME = "rqmc"

_loggers: dict[str, logging.Logger] = {}

_PLAIN_FORMAT = "%(asctime)s [%(levelname)s] %(name)s - %(message)s"
_TRACE_FORMAT = "%(asctime)s [%(levelname)s] %(name)s:%(lineno)d (%(funcName)s) - %(message)s"


def default_level() -> int:
    """
    Level named by RQMC_LOG_LEVEL, INFO when unset or unrecognised.
    """
    name = os.environ.get(LOG_LEVEL_ENV, "INFO").strip().upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.INFO


def get_logger(name: Optional[str] = None, level: int | str | None = None) -> logging.Logger:
    """
    Cached logger for `name` (the package root logger when omitted).

    Args:
        name: usually __name__ of the calling module
        level: optional level for this logger only

    Returns:
        The same logging.Logger for the same name
    """
    name = name or ROOT_NAME
    logger = _loggers.get(name)
    if logger is None:
        logger = logging.getLogger(name)
        _loggers[name] = logger
    if level is not None:
        logger.setLevel(level)
    return logger


def _console_handler(trace_mode: bool) -> logging.Handler:
    handler = RichHandler(
        console=Console(stderr=True),
        show_path=trace_mode,
        rich_tracebacks=trace_mode,
        markup=False,
    )
    handler.setFormatter(logging.Formatter("%(name)s - %(message)s"))
    return handler


def _file_handler(log_file: str | Path, trace_mode: bool) -> logging.Handler:
    path = Path(log_file)
    path.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(path)
    handler.setFormatter(logging.Formatter(_TRACE_FORMAT if trace_mode else _PLAIN_FORMAT))
    return handler


def configure_logging(
    level: int | str | None = None,
    log_file: str | Path | None = None,
    trace_mode: bool = False,
    console: bool = True,
) -> logging.Logger:
    """
    Replace the root handlers.

    Args:
        level: logging level (default: RQMC_LOG_LEVEL, else INFO)
        log_file: also write plain-text records here
        trace_mode: show source locations and rich tracebacks
        console: log to stderr

    Raises:
        ValueError: unknown level name
    """
    root = logging.getLogger()
    root.setLevel(default_level() if level is None else level)

    for handler in root.handlers[:]:
        root.removeHandler(handler)
    if console:
        root.addHandler(_console_handler(trace_mode))
    if log_file:
        root.addHandler(_file_handler(log_file, trace_mode))

    logger = get_logger(ROOT_NAME)
    logger.debug(
        "Logging configured: level=%s trace_mode=%s",
        logging.getLevelName(root.level),
        trace_mode,
    )
    return logger


def enable_trace_mode() -> logging.Logger:
    return configure_logging(level=logging.DEBUG, trace_mode=True)


def disable_trace_mode() -> logging.Logger:
    return configure_logging(level=logging.INFO, trace_mode=False)
