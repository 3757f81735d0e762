"""Seeded k-fold cross-validation with a size-weighted mean R²."""

from __future__ import annotations

from typing import Optional

import numpy as np
from loguru import logger

from src.analytics.evaluation.metrics import mse, r_squared, total_sum_of_squares
from src.analytics.evaluation.models import CvReport, FoldScore
from src.analytics.preprocess import scaler_fit, scaler_transform
from src.analytics.regressors.registry import ModelSpec, fit_model, predict
from src.errors import BadK, FoldError, ZeroVariance
from src.utils.validators import validate_xy


def kfold_indices(n: int, k: int, seed: int) -> list[np.ndarray]:
    """Shuffle 0..n-1 by seed and cut into k folds whose sizes differ by at most 1.

    The first n mod k folds get the extra row.
    """
    if int(k) != k or not 2 <= k <= n:
        raise BadK(f"k must satisfy 2 <= k <= n (n={n}), got {k}")
    order = np.random.default_rng(seed).permutation(n)
    return np.array_split(order, k)


def weighted_mean_r2(scores: list[FoldScore]) -> Optional[float]:
    """Σ sizeᵢ·r2ᵢ / Σ sizeᵢ over folds with a defined r2."""
    defined = [s for s in scores if s.r2 is not None]
    if not defined:
        return None
    sizes = np.array([s.size for s in defined], dtype=float)
    r2s = np.array([s.r2 for s in defined], dtype=float)
    return float(sizes @ r2s / sizes.sum())


def _score_fold(spec: ModelSpec, x, y, train_idx, test_idx, index: int) -> FoldScore:
    scaler = scaler_fit(x[train_idx])
    model = fit_model(spec, scaler_transform(scaler, x[train_idx]), y[train_idx])
    predicted = predict(model, scaler_transform(scaler, x[test_idx]))
    observed = y[test_idx]

    fold_mse = mse(observed, predicted)
    try:
        r2: Optional[float] = r_squared(observed, predicted)
    except ZeroVariance:
        r2 = None
    return FoldScore(
        index=index,
        size=int(test_idx.size),
        r2=r2,
        rmse=float(np.sqrt(fold_mse)),
        mse=fold_mse,
        tss=total_sum_of_squares(observed),
    )


def cross_validate(spec: ModelSpec, x, y, k: int = 10, seed: int = 42) -> CvReport:
    """Fit scaler and model on k−1 folds, score the held-out fold, for every fold.

    Any failure inside a fold is re-raised as FoldError carrying the fold index.
    """
    x, y = validate_xy(x, y)
    folds = kfold_indices(x.shape[0], k, seed)
    all_idx = np.arange(x.shape[0])

    scores = []
    for i, test_idx in enumerate(folds):
        train_idx = np.setdiff1d(all_idx, test_idx, assume_unique=True)
        try:
            score = _score_fold(spec, x, y, train_idx, test_idx, i)
        except Exception as e:
            raise FoldError(i, e) from e
        logger.debug("{} fold {}: size={} r2={} rmse={:.3f}", spec.kind, i, score.size, score.r2, score.rmse)
        scores.append(score)

    report = CvReport(k=k, seed=seed, fold_scores=scores, weighted_mean_r2=weighted_mean_r2(scores))
    logger.info("{} {}-fold CV weighted mean r2 = {}", spec.kind, k, report.weighted_mean_r2)
    return report
