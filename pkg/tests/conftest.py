"""Common test fixtures for the application."""

from collections.abc import Generator

import pytest
from loguru import logger

from src.config.logger import setup_test_logger
from src.config.settings import get_settings


def pytest_addoption(parser: pytest.Parser) -> None:
    """Add custom command line options."""
    parser.addoption(
        "--log-debug",
        action="store_true",
        default=False,
        help="Enable debug logging level for tests via test logger setup",
    )


@pytest.fixture(autouse=True)
def setup_logging(request: pytest.FixtureRequest) -> None:
    """Set up logging using the test config if --log-debug is passed."""
    if request.config.getoption("--log-debug"):
        setup_test_logger()


@pytest.fixture(autouse=True)
def fresh_settings() -> Generator[None, None, None]:
    """Re-read SEADSC_* variables for every test so monkeypatched env applies."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def captured_logs() -> Generator[list[str], None, None]:
    """Collect formatted loguru messages emitted during a test."""
    messages: list[str] = []
    handler_id = logger.add(messages.append, level="DEBUG", format="{level}|{message}")
    yield messages
    logger.remove(handler_id)
