from collections.abc import Generator

import pytest
from loguru import logger
from typer.testing import CliRunner


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(autouse=True)
def quiet_cli_logs(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """Keep command output free of log lines; drop handlers bound to runner streams."""
    monkeypatch.setenv("SEADSC_LOG_LEVEL", "ERROR")
    yield
    logger.remove()
