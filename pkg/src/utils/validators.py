"""Input validation utilities."""

from __future__ import annotations

import numpy as np

from src.errors import BadHyperparam, DimensionMismatch, EmptyInput


def validate_positive(value: float, name: str = "value") -> None:
    if not value > 0:
        raise BadHyperparam(f"{name} must be positive, got {value}")


def validate_non_negative(value: float, name: str = "value") -> None:
    if not value >= 0:
        raise BadHyperparam(f"{name} must be non-negative, got {value}")


def validate_min_int(value: int, min_value: int, name: str = "value") -> None:
    if int(value) != value or value < min_value:
        raise BadHyperparam(f"{name} must be an integer >= {min_value}, got {value}")


def validate_sample_size(n: int, min_size: int = 1) -> None:
    if n < min_size:
        raise EmptyInput(f"Sample size must be at least {min_size}, got {n}")


def as_matrix(x, name: str = "x") -> np.ndarray:
    """Coerce to a 2-D float array."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise DimensionMismatch(f"{name} must be 2-D, got shape {arr.shape}")
    return arr


def as_vector(y, name: str = "y") -> np.ndarray:
    arr = np.asarray(y, dtype=float)
    if arr.ndim != 1:
        raise DimensionMismatch(f"{name} must be 1-D, got shape {arr.shape}")
    return arr


def validate_xy(x, y) -> tuple[np.ndarray, np.ndarray]:
    """Check a design matrix and target vector agree on row count."""
    x = as_matrix(x)
    y = as_vector(y)
    if x.shape[0] != y.shape[0]:
        raise DimensionMismatch(f"x has {x.shape[0]} rows but y has {y.shape[0]} values")
    return x, y


def validate_feature_count(x: np.ndarray, expected: int) -> None:
    if x.shape[1] != expected:
        raise DimensionMismatch(f"expected {expected} features, got {x.shape[1]}")
