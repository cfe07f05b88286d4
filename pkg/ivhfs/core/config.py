"""
Library and command-line configuration using Pydantic settings.
"""
from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Runtime settings, read from IVHFS_* environment variables or .env."""

    # Application
    APP_NAME: str = "ivhfs"
    APP_VERSION: str = "1.0.0"

    # Command line defaults; the library never picks a profile on its own
    DEFAULT_PROFILE: Literal["componentwise", "rank"] = "componentwise"
    OUTPUT_FORMAT: Literal["text", "machine"] = "text"

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_JSON: bool = False

    # Topology validation
    VALIDATION_WORKERS: int = Field(1, ge=1, le=64)

    # Property-test failure dumps
    FAILURE_DUMP_DIR: Path = Path(".ivhfs-failures")

    class Config:
        env_prefix = "IVHFS_"
        env_file = ".env"
        case_sensitive = True


settings = Settings()
