# -*- coding: utf-8 -*-

import os
import sys

import pytest

# Make "src" importable when pytest runs from the repository root
ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from src.core.config_manager import ConfigManager, OUTPUT_DIR_ENV_VAR  # noqa: E402
from src.core.types import AntennaConfig  # noqa: E402


@pytest.fixture
def cfg_2232():
    return AntennaConfig(2, 2, 3, 2)


@pytest.fixture
def cfg_1211():
    return AntennaConfig(1, 2, 1, 1)


@pytest.fixture
def cfg_1212():
    return AntennaConfig(1, 2, 1, 2)


@pytest.fixture
def cfg_2433():
    return AntennaConfig(2, 4, 3, 3)


@pytest.fixture
def config_manager(tmp_path, monkeypatch):
    """ConfigManager on a throwaway file, isolated from the user's environment"""
    monkeypatch.delenv(OUTPUT_DIR_ENV_VAR, raising=False)
    monkeypatch.delenv("ZICGDOF_CONFIG", raising=False)
    return ConfigManager(str(tmp_path / "config.json"), load_env=False)
