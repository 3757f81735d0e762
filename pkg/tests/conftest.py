"""Shared fixtures and mock data generators for tests."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from src.config.models import PipelineConfig
from src.data.ingest import Dataset, parse_csv
from src.data.mock_data import mock_insurance_csv

HEADER = b"age,sex,bmi,children,smoker,region,charges\n"

# Hyperparameters small enough for the whole pipeline to run in a few seconds.
FAST_MODEL_PARAMS = {
    "gb_n_estimators": 20,
    "svr_max_iters": 1000,
    "k": 5,
}


# ── Insurance data ──────────────────────────────────────

@pytest.fixture
def insurance_csv() -> bytes:
    return mock_insurance_csv(n=300, seed=7)


@pytest.fixture
def insurance_dataset(insurance_csv) -> Dataset:
    return parse_csv(insurance_csv)


@pytest.fixture
def small_csv() -> bytes:
    """Three hand-written rows, the first one as it appears in the public file."""
    return HEADER + (
        b"19,female,27.9,0,yes,southwest,16884.924\n"
        b"18,male,33.77,1,no,southeast,1725.5523\n"
        b"28,male,33,3,no,southeast,4449.462\n"
    )


@pytest.fixture
def insurance_file(tmp_path: Path, insurance_csv: bytes) -> Path:
    path = tmp_path / "insurance.csv"
    path.write_bytes(insurance_csv)
    return path


@pytest.fixture
def records_file(tmp_path: Path) -> Path:
    path = tmp_path / "records.csv"
    path.write_bytes(mock_insurance_csv(n=25, seed=11, with_target=False))
    return path


@pytest.fixture
def fast_config(insurance_file: Path, tmp_path: Path) -> PipelineConfig:
    return PipelineConfig(
        input_path=str(insurance_file),
        output_dir=str(tmp_path / "out"),
        **FAST_MODEL_PARAMS,
    )


@pytest.fixture
def fast_config_file(tmp_path: Path) -> Path:
    path = tmp_path / "fast.yaml"
    path.write_text("".join(f"{key}: {value}\n" for key, value in FAST_MODEL_PARAMS.items()))
    return path


# ── Regression data ─────────────────────────────────────

@pytest.fixture
def linear_data() -> tuple[np.ndarray, np.ndarray]:
    """Noisy linear target over three well-conditioned features."""
    rng = np.random.default_rng(0)
    x = rng.normal(size=(120, 3))
    y = 4.0 + x @ np.array([2.0, -1.5, 0.5]) + rng.normal(scale=0.1, size=120)
    return x, y


@pytest.fixture
def step_data() -> tuple[np.ndarray, np.ndarray]:
    """Piecewise-constant target on one feature."""
    x = np.array([[0.0], [1.0], [2.0], [3.0]])
    y = np.array([0.0, 0.0, 10.0, 10.0])
    return x, y
