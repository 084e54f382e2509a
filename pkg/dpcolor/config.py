"""dpcolor configuration from environment (prefix DPCOLOR_)."""
from __future__ import annotations

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from dpcolor.env_loader import get_dotenv_path


class Settings(BaseSettings):
    """Solver budgets, harness defaults and logging, loaded from env and .env."""

    model_config = SettingsConfigDict(
        env_prefix="DPCOLOR_",
        env_file=str(get_dotenv_path()),
        env_file_encoding="utf-8",
        extra="ignore",
    )

    solver_budget: int = Field(10_000_000, ge=0, description="Solver node cap per command")
    base_case_size: int = Field(6, ge=1, description="Reducer solves components this small exactly")
    list_chromatic_max_vertices: int = 8
    list_chromatic_max_k: int = 3
    workers: int = Field(1, ge=1)
    fuzz_seed: int = 2018
    fuzz_trials: int = 100
    fuzz_assignments_per_graph: int = 20
    fuzz_n_min: int = 3
    fuzz_n_max: int = 40
    generator_attempts: int = 50
    log_level: str = "WARNING"
    api_url: str | None = None  # remote mode for `dpcolor color --api-url`


def get_settings() -> Settings:
    # env file resolved per call; DPCOLOR_ENV_FILE may change after import
    return Settings(_env_file=get_dotenv_path())
