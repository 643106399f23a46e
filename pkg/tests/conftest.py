"""Shared pytest fixtures."""

from __future__ import annotations

from pathlib import Path
from typing import Generator

import pytest

from artinmetric.config import Config, reset_config
from artinmetric.words import ARTIN, DUAL, GroupParams, Word, parse_word

_SETTINGS = """
[oracle]
artin_max_radius = 7
dual_max_radius = 5

[horoboundary]
max_runs = 512
approach_first = 1
approach_last = 30

[growth]
enumeration_max_n = 8
order = 12

[sampling]
seed = 7
points = 6
omega0_points = 3
pairs = 200

[output]
reports_dir = "{reports}"

[logging]
level = "WARNING"
format = "json"
"""


def artin(text: str, params: GroupParams) -> Word:
    return parse_word(text, ARTIN, params)


def dual(text: str, params: GroupParams) -> Word:
    return parse_word(text, DUAL, params)


@pytest.fixture()
def k3() -> GroupParams:
    return GroupParams(3)


@pytest.fixture()
def k4() -> GroupParams:
    return GroupParams(4)


@pytest.fixture()
def k5() -> GroupParams:
    return GroupParams(5)


@pytest.fixture()
def settings_path(tmp_path: Path) -> Path:
    path = tmp_path / "settings.toml"
    path.write_text(_SETTINGS.format(reports=tmp_path / "reports"), encoding="utf-8")
    return path


@pytest.fixture()
def cfg(settings_path: Path, monkeypatch: pytest.MonkeyPatch) -> Generator[Config, None, None]:
    """Small-sample Config, also installed as the process singleton."""
    for key in ("ARTINMETRIC_SEED", "REPORTS_DIR", "LOG_LEVEL", "LOG_FORMAT"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv("ARTINMETRIC_CONFIG", str(settings_path))
    reset_config()
    yield Config(settings_path)
    reset_config()
