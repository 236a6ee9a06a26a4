"""Loguru setup for command line runs and for tests.

Every module logs through ``from loguru import logger``; these functions only
replace the sinks of that shared logger.
"""

import sys
from typing import Any

from loguru import logger

from src.config.settings import get_settings

PRETTY_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)


def setup_app_logger(verbose: bool = False) -> None:
    """Send logs to stderr so stdout carries only command results.

    Level and format come from SEADSC_LOG_LEVEL (default INFO) and
    SEADSC_LOG_FORMAT (``pretty`` or ``json``).

    Args:
        verbose: Force DEBUG level regardless of the configured level.
    """
    settings = get_settings()
    level = "DEBUG" if verbose else settings.log_level.upper()
    as_json = settings.log_format == "json"

    logger.remove()
    logger.add(
        sys.stderr,
        level=level,
        format="{message}" if as_json else PRETTY_FORMAT,
        serialize=as_json,
        colorize=not as_json,
        backtrace=True,
        diagnose=False,
    )
    logger.debug(f"Logging {settings.log_format} at {level}")


def setup_test_logger() -> None:
    """Print every DEBUG record, bound extras included, to stdout (``pytest --log-debug``)."""
    logger.remove()
    logger.add(
        lambda msg: print(msg, end=""),  # type: ignore[reportUnknownLambdaType] # noqa: T201
        level="DEBUG",
        format=PRETTY_FORMAT + " | <magenta>{extra}</magenta>",
        colorize=True,
        backtrace=True,
        diagnose=True,
        catch=True,
    )


def log_test_step(step: str, **kwargs: Any) -> None:
    """Log a named test step with context, visible under ``uv run test_debug``.

    Args:
        step: What the test is about to do, e.g. "Train and encode".
        **kwargs: Context bound to the record (paths, sizes).
    """
    logger.bind(step=step, **kwargs).debug("Test step")
