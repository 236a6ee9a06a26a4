from collections.abc import Callable
from functools import wraps
from typing import ParamSpec, TypeVar

import typer
from loguru import logger

from src.application.use_cases.exceptions import (
    CodeMapsNotFoundError,
    FramesNotFoundError,
    UseCaseError,
)
from src.entities.exceptions import DomainError

EXIT_OK = 0
EXIT_INTERNAL_ERROR = 1
EXIT_USER_ERROR = 2

# Failures the user can fix by changing inputs or flags.
USER_ERRORS: tuple[type[Exception], ...] = (
    DomainError,
    FramesNotFoundError,
    CodeMapsNotFoundError,
    FileNotFoundError,
    NotADirectoryError,
)

P = ParamSpec("P")
R = TypeVar("R")


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the process exit code."""
    if isinstance(exc, USER_ERRORS):
        return EXIT_USER_ERROR
    return EXIT_INTERNAL_ERROR


def handle_cli_errors(command: Callable[P, R]) -> Callable[P, R]:
    """Turn exceptions escaping a command into an error line and exit code.

    User errors exit with 2, anything else with 1.
    """

    @wraps(command)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
        try:
            return command(*args, **kwargs)
        except typer.Exit:
            raise
        except USER_ERRORS as e:
            typer.echo(f"Error: {e}", err=True)
            raise typer.Exit(code=EXIT_USER_ERROR) from e
        except UseCaseError as e:
            typer.echo(f"Internal error: {e}", err=True)
            raise typer.Exit(code=EXIT_INTERNAL_ERROR) from e
        except Exception as e:
            logger.exception(f"Unexpected error: {e!s}")
            typer.echo("Internal error", err=True)
            raise typer.Exit(code=EXIT_INTERNAL_ERROR) from e

    return wrapper
