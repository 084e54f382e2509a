"""Locate and load the dpcolor .env file.

The file is `<root>/.env` next to pyproject.toml unless DPCOLOR_ENV_FILE names
another one. The CLI, the API and the fixture script call `load_env()` at import;
`get_settings()` reads the same file through `get_dotenv_path()`.
"""
from __future__ import annotations

import logging
import os
from pathlib import Path

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

ENV_FILE_VAR = "DPCOLOR_ENV_FILE"


def get_project_root() -> Path:
    # <root>/dpcolor/env_loader.py
    return Path(__file__).resolve().parent.parent


def get_dotenv_path() -> Path:
    named = os.environ.get(ENV_FILE_VAR)
    return Path(named).expanduser() if named else get_project_root() / ".env"


def load_env(override: bool = False) -> Path | None:
    """Load the env file into os.environ and return it, or None when there is none.

    Variables already set win unless `override` is true.
    """
    path = get_dotenv_path()
    if not path.is_file():
        logger.debug("no env file at %s", path)
        return None
    load_dotenv(path, override=override)
    return path
