from RQMC.logs.logging_config import (
    get_logger,
    configure_logging,
    enable_trace_mode,
    disable_trace_mode,
)

__all__ = [
    "get_logger",
    "configure_logging",
    "enable_trace_mode",
    "disable_trace_mode",
]
