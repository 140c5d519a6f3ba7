"""Shared fixtures: default settings and the worked-example matrix documents."""

from pathlib import Path

import pytest

from src.config import load_settings
from src.constants import ENV_NMAX
from src.linalg import Matrix
from src.verification import load_fixture

ROOT = Path(__file__).resolve().parents[1]
CONFIG_PATH = ROOT / 'config' / 'compmat_config.json'


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    monkeypatch.delenv(ENV_NMAX, raising=False)
    return load_settings(str(CONFIG_PATH))


@pytest.fixture
def fixture_matrix():
    def load(name: str) -> Matrix:
        return load_fixture(name).A
    return load


@pytest.fixture
def fixture_document():
    return load_fixture


@pytest.fixture
def fixture_file():
    def path(name: str) -> str:
        return str(ROOT / 'data' / 'fixtures' / f"{name}.json")
    return path


def matrix(*rows) -> Matrix:
    return Matrix.from_rows(rows)
