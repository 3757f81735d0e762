"""Regression metrics: R², RMSE, MSE."""

from __future__ import annotations

import math

import numpy as np

from src.analytics.evaluation.models import MetricPair
from src.errors import DimensionMismatch, EmptyInput, ZeroVariance


def _pair(observed, predicted) -> tuple[np.ndarray, np.ndarray]:
    o = np.asarray(observed, dtype=float).ravel()
    p = np.asarray(predicted, dtype=float).ravel()
    if o.shape != p.shape:
        raise DimensionMismatch(f"observed has {o.size} values, predicted has {p.size}")
    return o, p


def total_sum_of_squares(observed) -> float:
    o = np.asarray(observed, dtype=float).ravel()
    centered = o - o.mean()
    return float(centered @ centered)


def r_squared(observed, predicted) -> float:
    """1 − RSS/TSS."""
    o, p = _pair(observed, predicted)
    tss = total_sum_of_squares(o) if o.size else 0.0
    if o.size < 2 or tss == 0:
        raise ZeroVariance("R² is undefined when the observed values are constant")
    residual = o - p
    return float(1.0 - (residual @ residual) / tss)


def mse(observed, predicted) -> float:
    """Mean of squared residuals."""
    o, p = _pair(observed, predicted)
    if o.size == 0:
        raise EmptyInput("cannot score zero predictions")
    residual = p - o
    return float((residual @ residual) / o.size)


def rmse(observed, predicted) -> float:
    return math.sqrt(mse(observed, predicted))


def r2_from_rmse(rmse_value: float, n: int, tss: float) -> float:
    """R² implied by an RMSE on an evaluation set of size n with total sum of squares tss."""
    return 1.0 - n * rmse_value ** 2 / tss


def evaluate(observed, predicted) -> MetricPair:
    return MetricPair(r2=r_squared(observed, predicted), rmse=rmse(observed, predicted))
