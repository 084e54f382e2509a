"""Settings from the environment and the dpcolor env file."""
from __future__ import annotations

import os

import pytest
from pydantic import ValidationError

from dpcolor.config import get_settings
from dpcolor.env_loader import ENV_FILE_VAR, get_dotenv_path, get_project_root, load_env


def test_defaults_without_env_file():
    s = get_settings()
    assert (s.solver_budget, s.base_case_size, s.workers, s.fuzz_seed) == (10_000_000, 6, 1, 2018)
    assert s.api_url is None


def test_default_env_file_sits_in_the_project_root(monkeypatch):
    monkeypatch.delenv(ENV_FILE_VAR)
    assert get_dotenv_path() == get_project_root() / ".env"
    assert (get_project_root() / "dpcolor" / "env_loader.py").is_file()


def test_settings_read_the_named_env_file(monkeypatch, tmp_path):
    env = tmp_path / "solver.env"
    env.write_text("DPCOLOR_SOLVER_BUDGET=42\nDPCOLOR_WORKERS=3\nOTHER_TOOL=x\n", encoding="utf-8")
    monkeypatch.setenv(ENV_FILE_VAR, str(env))
    s = get_settings()
    assert (s.solver_budget, s.workers) == (42, 3)
    monkeypatch.setenv("DPCOLOR_SOLVER_BUDGET", "7")
    assert get_settings().solver_budget == 7


def test_invalid_values_are_rejected(monkeypatch):
    monkeypatch.setenv("DPCOLOR_WORKERS", "0")
    with pytest.raises(ValidationError):
        get_settings()


def test_load_env_keeps_existing_values_unless_told(monkeypatch, tmp_path):
    env = tmp_path / ".env"
    env.write_text("DPCOLOR_FUZZ_SEED=99\n", encoding="utf-8")
    monkeypatch.setenv(ENV_FILE_VAR, str(env))
    monkeypatch.setenv("DPCOLOR_FUZZ_SEED", "1")
    assert load_env() == env
    assert os.environ["DPCOLOR_FUZZ_SEED"] == "1"
    assert load_env(override=True) == env
    assert os.environ["DPCOLOR_FUZZ_SEED"] == "99"
    assert get_settings().fuzz_seed == 99


def test_missing_env_file_is_not_an_error():
    assert not get_dotenv_path().exists()
    assert load_env() is None
