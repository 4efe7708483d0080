from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

sys.path.insert(0, str(Path(__file__).parent))


def load_fixture(name: str):
    with open(FIXTURES / name, "r", encoding="utf-8") as fh:
        return json.load(fh)


def corpus_paths() -> list[Path]:
    return sorted((FIXTURES / "corpus").glob("*.json"))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
