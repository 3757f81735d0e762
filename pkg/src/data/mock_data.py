"""Realistic mock data generator for tests and demos.

Simulates the public medical-cost dataset: adults aged 18-64, BMI centred
near 30, mostly small families, ~20% smokers. Charges grow with age and
children, carry a right-skewed noise term, and jump sharply for smokers
(more so for obese smokers), which is the structure the EDA is meant to
surface.
"""

from __future__ import annotations

import numpy as np
import pandas as pd

from src.data.ingest import Dataset, parse_csv
from src.data.schema import REGION_LEVELS, SEX_LEVELS, SMOKER_LEVELS

# ── Population shape ──────────────────────────────────────

CHILDREN_P = [0.43, 0.24, 0.18, 0.12, 0.02, 0.01]
SMOKER_P = [0.80, 0.20]
REGION_P = [0.24, 0.24, 0.28, 0.24]

AGE_SLOPE = 265.0
CHILD_COST = 475.0
BASE_COST = -4000.0
# Young non-obese smokers stay under the 17,500 cutoff; obese smokers never do.
SMOKER_COST = 7500.0
OBESE_SMOKER_COST = 20000.0
MIN_CHARGE = 1121.87


def mock_insurance_frame(n: int = 1338, seed: int = 42) -> pd.DataFrame:
    """Raw (string-valued categories) frame in the canonical column order."""
    rng = np.random.default_rng(seed)

    age = rng.integers(18, 65, n)
    sex = rng.choice(SEX_LEVELS, n)
    bmi = rng.normal(30.6, 6.1, n).clip(16.0, 53.1).round(3)
    children = rng.choice(len(CHILDREN_P), n, p=CHILDREN_P)
    smoker = rng.choice(SMOKER_LEVELS, n, p=SMOKER_P)
    region = rng.choice(REGION_LEVELS, n, p=REGION_P)

    is_smoker = smoker == "yes"
    noise = rng.gamma(shape=1.2, scale=1500.0, size=n)
    charges = AGE_SLOPE * age + CHILD_COST * children + BASE_COST + noise
    charges += np.where(is_smoker, SMOKER_COST + np.where(bmi >= 30, OBESE_SMOKER_COST, 0.0), 0.0)
    charges = charges.clip(min=MIN_CHARGE).round(5)

    return pd.DataFrame({
        "age": age,
        "sex": sex,
        "bmi": bmi,
        "children": children,
        "smoker": smoker,
        "region": region,
        "charges": charges,
    })


def mock_insurance_csv(n: int = 1338, seed: int = 42, with_target: bool = True) -> bytes:
    frame = mock_insurance_frame(n, seed)
    if not with_target:
        frame = frame.drop(columns=["charges"])
    return frame.to_csv(index=False, lineterminator="\n").encode("utf-8")


def mock_insurance_dataset(n: int = 1338, seed: int = 42) -> Dataset:
    return parse_csv(mock_insurance_csv(n, seed))
