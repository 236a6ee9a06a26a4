"""Entry points behind ``uv run <command>`` for development tasks.

Each ``run_*`` function is listed under ``[project.scripts]`` in pyproject.toml
and forwards any extra command line arguments to the underlying tool.
"""

import os
import subprocess
import sys
from pathlib import Path

from dotenv import load_dotenv

ROOT = Path(__file__).parent.parent
SCRIPTS = Path(__file__).parent

TOOLS = {
    "lint": ["uv", "tool", "run", "ruff", "check", "src", "tests", "scripts"],
    "format": ["uv", "tool", "run", "ruff", "format", "src", "tests", "scripts"],
    "typecheck": ["uv", "tool", "run", "pyright", "src"],
    "precommit": ["uv", "tool", "run", "pre-commit", "run", "--all-files"],
    "pytest": ["python", "-m", "pytest"],
    "make_sequence": ["python", str(SCRIPTS / "make_synthetic_sequence.py")],
}


def project_env() -> dict[str, str]:
    """Environment for child processes: layered .env files plus PYTHONPATH.

    Later files override earlier ones: ``.env``, ``.env.local``,
    ``.env.{PYTHON_ENV}``, ``.env.{PYTHON_ENV}.local`` (PYTHON_ENV defaults to
    ``development``). SEADSC_* variables set here reach the CLI.
    """
    env_name = os.getenv("PYTHON_ENV", "development")
    for name in (".env", ".env.local", f".env.{env_name}", f".env.{env_name}.local"):
        env_file = ROOT / name
        if env_file.exists():
            print(f"Loading environment from {env_file.name}...")
            load_dotenv(env_file, override=True)
    env = os.environ.copy()
    env.setdefault("PYTHONPATH", str(ROOT))
    return env


def _run(argv: list[str]) -> None:
    result = subprocess.run(argv, env=project_env(), cwd=ROOT, check=False)
    if result.returncode != 0:
        sys.exit(result.returncode)


def _tool(name: str, *args: str) -> None:
    _run([*TOOLS[name], *args])


def _script(script_name: str, *args: str) -> None:
    _run([str(SCRIPTS / script_name), *args])


# Code quality
def run_format() -> None:
    """Run the ruff formatter."""
    _tool("format", *sys.argv[1:])


def run_lint() -> None:
    """Run the ruff linter."""
    _tool("lint", *sys.argv[1:])


def run_typecheck() -> None:
    """Run pyright in strict mode."""
    _tool("typecheck", *sys.argv[1:])


def run_precommit() -> None:
    """Run every pre-commit hook on all files."""
    _tool("precommit")


# Tests
def run_test() -> None:
    """Unit and integration tests."""
    _script("run_tests.sh", "test")


def run_test_cli() -> None:
    """Command line integration tests only."""
    _script("run_tests.sh", "test_cli")


def run_test_e2e() -> None:
    """Full pipeline over a synthetic clip."""
    _script("run_tests.sh", "test_e2e")


def run_test_cov() -> None:
    """Whole suite with coverage and HTML reports."""
    _script("run_tests_with_coverage.sh")


def run_test_debug() -> None:
    """Pytest with loguru output and ``log_test_step`` lines on the console."""
    _tool("pytest", "-s", "--log-debug", "--no-cov", *sys.argv[1:])


def run_check() -> None:
    """Pre-commit hooks, then unit and integration tests."""
    run_precommit()
    run_test()
    print("All checks passed (e2e not run).")


def run_check_all() -> None:
    """Everything in ``check`` plus the end-to-end tests."""
    run_check()
    run_test_e2e()
    print("All checks passed, e2e included.")


# Sample data
def run_make_sequence() -> None:
    """Write a synthetic clip and its gt.csv (OUT_DIR defaults to ./sample)."""
    _tool("make_sequence", *(sys.argv[1:] or ["sample"]))


if __name__ == "__main__":
    if len(sys.argv) < 2:  # noqa: PLR2004
        print("Usage: python scripts/bash_runner.py <command> [args...]")
        sys.exit(1)

    target = globals().get(f"run_{sys.argv[1]}")
    sys.argv = sys.argv[1:]
    if not callable(target):
        print(f"Error: Unknown command '{sys.argv[0]}'")
        sys.exit(1)
    target()
