import logging

import pytest

from RQMC.logs import configure_logging, enable_trace_mode, disable_trace_mode, get_logger
from RQMC.logs.logging_config import default_level, LOG_LEVEL_ENV


@pytest.fixture
def root_handlers():
    """Put pytest's own handlers back after a test reconfigures the root logger."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield root
    for handler in root.handlers[:]:
        root.removeHandler(handler)
        handler.close()
    for handler in handlers:
        root.addHandler(handler)
    root.setLevel(level)


def test_default_level(monkeypatch):
    monkeypatch.setenv(LOG_LEVEL_ENV, "debug")
    assert default_level() == logging.DEBUG
    monkeypatch.setenv(LOG_LEVEL_ENV, "chatty")
    assert default_level() == logging.INFO
    monkeypatch.delenv(LOG_LEVEL_ENV)
    assert default_level() == logging.INFO


def test_get_logger_caches():
    assert get_logger("RQMC.tests") is get_logger("RQMC.tests")
    assert get_logger().name == "rqmc"
    assert get_logger("RQMC.tests.levelled", level=logging.WARNING).level == logging.WARNING


def test_configure_logging_writes_file(root_handlers, tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    configure_logging(level="INFO", log_file=log_file)
    assert len(root_handlers.handlers) == 2
    get_logger("RQMC.tests").info("hello from the test")
    for handler in root_handlers.handlers:
        handler.flush()
    assert "hello from the test" in log_file.read_text()


def test_configure_logging_without_console(root_handlers):
    configure_logging(level=logging.WARNING, console=False)
    assert root_handlers.handlers == []
    assert root_handlers.level == logging.WARNING


def test_trace_mode_toggles(root_handlers):
    enable_trace_mode()
    assert root_handlers.level == logging.DEBUG
    disable_trace_mode()
    assert root_handlers.level == logging.INFO


def test_unknown_level_keeps_handlers(root_handlers):
    before = root_handlers.handlers[:]
    with pytest.raises(ValueError):
        configure_logging(level="CHATTY")
    assert root_handlers.handlers == before
