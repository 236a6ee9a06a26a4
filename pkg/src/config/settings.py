from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class AppSettings(BaseSettings):
    """Parses SEADSC_* variables from the environment on instantiation."""

    model_config = SettingsConfigDict(
        # Get the project root directory (where .env is located)
        env_file=str(Path(__file__).parent.parent.parent / ".env"),
        env_file_encoding="utf-8",
        env_prefix="SEADSC_",
        extra="ignore",
    )

    threads: int = Field(default=1, ge=1, description="Upper bound on worker threads")
    log_level: str = "INFO"
    log_format: Literal["pretty", "json"] = "pretty"


@lru_cache
def get_settings() -> AppSettings:
    """Returns the application settings, loaded from environment."""
    return AppSettings()
