"""Test configuration and fixtures."""

import json
import random

import pytest

from config.settings import reset_settings
from src.models.matrix import DiagonalSpectrum, Matrix, MatrixPair
from src.models.pattern import Pattern


@pytest.fixture(autouse=True)
def mock_settings(monkeypatch):
    """Fresh settings per test, single-process enumeration."""
    reset_settings()
    monkeypatch.setenv("MATALG_THREADS", "1")
    monkeypatch.delenv("MATALG_LOG_DIR", raising=False)

    yield

    reset_settings()


@pytest.fixture
def rng():
    """Seeded generator so random instances are reproducible."""
    return random.Random(20240601)


@pytest.fixture
def cycle3():
    """The 3-cycle 1 -> 2 -> 3 -> 1."""
    return Pattern.from_edges(3, [(1, 2), (2, 3), (3, 1)])


@pytest.fixture
def counterexample_pair():
    """(diag(1, 2), E_12): Schur irreducible but reducible."""
    return MatrixPair(
        spectrum=DiagonalSpectrum.of([1, 2]),
        matrix=Matrix.from_rows([[0, 1], [0, 0]]),
    )


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON payload to a temp file and return its path."""

    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path

    return _write
