"""Application configuration settings"""

import logging
import sys
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings"""

    model_config = SettingsConfigDict(env_prefix="CLIQUECOVER_", case_sensitive=False)

    # App settings
    app_name: str = "cliquecover"
    log_level: str = "WARNING"

    # Search guards
    oracle_cap: int = Field(default=10**7, ge=1, description="Largest C(m, s) the exhaustive scans accept")
    max_candidates: int = Field(
        default=200_000, ge=1, description="Recursive covers tried per best-effort extraction"
    )

    # Report settings
    default_format: str = "text"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


def configure_logging(level: str | None = None) -> None:
    """Send log records to stderr so stdout only carries results."""
    settings = get_settings()
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
