"""
Configuration management for the pattern algebra toolkit.
Uses MATALG_* environment variables with pydantic for validation.
"""

import os
from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    # Enumeration workers
    THREADS: int = Field(default=1, ge=1)

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_DIR: Optional[Path] = None

    # Float ingestion
    SUPPORT_TOLERANCE: float = Field(default=1e-9, ge=0.0)

    # Size caps
    LABELED_CAP: int = 6
    UNLABELED_CAP: int = 6
    PERMUTATION_CAP: int = 10
    SUBSET_SCAN_CAP: int = 20
    SUBSET_LIST_CAP: int = Field(default=1 << 20, ge=1)
    SUBALGEBRA_MAX_N: int = 12

    # Generic instance drawing
    GENERIC_ENTRY_BOUND: int = Field(default=100, ge=2)

    model_config = SettingsConfigDict(
        env_prefix="MATALG_", case_sensitive=True, extra="ignore"
    )

    def create_directories(self) -> None:
        """Create the log directory if one is configured."""
        if self.LOG_DIR is not None:
            self.LOG_DIR.mkdir(parents=True, exist_ok=True)


# Global settings instance
_settings: Optional[Settings] = None


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings()
        _settings.create_directories()
    return _settings


def reset_settings() -> None:
    """Reset settings - useful for testing."""
    global _settings
    _settings = None
    get_settings.cache_clear()


def worker_count() -> int:
    """Worker processes for enumeration, never more than the machine offers."""
    return max(1, min(get_settings().THREADS, os.cpu_count() or 1))
