"""
Application configuration settings loaded from environment variables.

Values come from the repository .env file, then the process environment,
then the defaults declared on Settings.

Every exponential enumeration in the package (corank-nullity oracle, circuit
listing, flat enumeration, isotropy spectrum) is guarded by
ORACLE_SUBSET_LIMIT; the deletion-contraction engine only warns.
"""

import sys
import logging
import os
from functools import lru_cache
from pathlib import Path
from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

try:
    MAIN_DIR = os.path.abspath(os.path.join(
        os.path.dirname(__file__), "../.."))
    sys.path.append(MAIN_DIR)
except (ImportError, OSError) as e:
    logging.error("Failed to set up main directory path: %s", e)
    sys.exit(1)


class Settings(BaseSettings):
    """
    Runtime configuration for the torus quotient toolkit.

    Note:
    - Limits guard the exponential algorithms; the CLI can override them
      per invocation with --limit / --force.
    - Console logging goes to stderr so reports on stdout stay parseable.
    """

    # Exponential-cost guards
    ORACLE_SUBSET_LIMIT: int = Field(
        20,
        ge=1,
        le=30,
        description="Largest ground set accepted by subset enumerations"
    )
    DELETION_CONTRACTION_WARN: int = Field(
        25,
        ge=1,
        description="Ground-set size above which deletion-contraction warns"
    )
    TUTTE_WORKERS: int = Field(
        1,
        ge=1,
        le=64,
        description="Threads used for independent direct-sum components"
    )

    # Logging
    LOG_LEVEL: str = Field(
        "WARNING",
        description="Console log level name"
    )
    LOG_TO_FILE: bool = Field(
        False,
        description="Also write logs to a rotating file"
    )
    LOG_DIR: Path = Field(
        Path(MAIN_DIR) / "logs",
        description="Directory for the rotating log file"
    )
    LOG_FILE: str = Field(
        "torus_quotients.log",
        description="Rotating log file name"
    )

    model_config = SettingsConfigDict(
        env_file=str(MAIN_DIR)+"/.env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Load the cached Settings, exiting with status 1 on invalid configuration."""
    try:
        settings = Settings()

        if settings.LOG_TO_FILE:
            settings.LOG_DIR.mkdir(exist_ok=True, parents=True)

        return settings

    except ValidationError as e:
        print("Configuration error:", file=sys.stderr)
        print(e.json(indent=2), file=sys.stderr)
        sys.exit(1)
    except OSError as e:
        print(f"Filesystem error: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    settings = get_settings()
    print("=== Configuration Debug ===")
    print(f"Oracle subset limit: {settings.ORACLE_SUBSET_LIMIT}")
    print(f"Deletion-contraction warning: {settings.DELETION_CONTRACTION_WARN}")
    print(f"Tutte workers: {settings.TUTTE_WORKERS}")
    print(f"Log level: {settings.LOG_LEVEL}")
