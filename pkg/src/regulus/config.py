"""Runtime configuration loaded from REGULUS_* environment variables"""

from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Caps and defaults shared by the library and the CLI"""

    model_config = SettingsConfigDict(
        env_prefix="REGULUS_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    max_order: int = Field(
        default=20_000_000,
        ge=1,
        description="Hard guard on the order of any generating function built on demand",
    )
    exact_cap: int = Field(
        default=100_000,
        ge=0,
        description="Largest n accepted for exact b_l(n)",
    )
    mod_cap: int = Field(
        default=10_000_000,
        ge=0,
        description="Largest n accepted for b_l(n) mod l",
    )
    default_order: int = Field(default=2000, ge=1, description="Default truncation order")
    default_nmax: int = Field(default=200, ge=0, description="Default n_max for family checks")
    threads: Optional[int] = Field(
        default=None,
        ge=1,
        description="Check-level parallelism (None = available CPUs)",
    )
    log_level: str = Field(default="WARNING", description="Level for the regulus logger")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance"""
    return Settings()
