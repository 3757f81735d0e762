"""Gradient boosting with squared-error loss and regression-tree weak learners.

F₀ is the training mean; stage m fits a tree to the residuals y − F_{m−1}(x)
(the negative gradient of squared error) and adds learning_rate × tree.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator

import numpy as np
from loguru import logger

from src.analytics.evaluation.metrics import rmse
from src.analytics.regressors.models import GbmModel
from src.analytics.regressors.tree import tree_fit, tree_predict
from src.utils.validators import (
    as_matrix,
    validate_feature_count,
    validate_min_int,
    validate_positive,
    validate_sample_size,
    validate_xy,
)

DEFAULT_N_ESTIMATORS = 100
DEFAULT_LEARNING_RATE = 0.1
DEFAULT_MAX_DEPTH = 3
DEFAULT_MIN_SAMPLES_LEAF = 1


def gbm_fit(
    x,
    y,
    n_estimators: int = DEFAULT_N_ESTIMATORS,
    learning_rate: float = DEFAULT_LEARNING_RATE,
    max_depth: int = DEFAULT_MAX_DEPTH,
    min_samples_leaf: int = DEFAULT_MIN_SAMPLES_LEAF,
) -> GbmModel:
    x, y = validate_xy(x, y)
    validate_sample_size(x.shape[0], 2)
    validate_min_int(n_estimators, 1, "n_estimators")
    validate_positive(learning_rate, "learning_rate")
    validate_min_int(max_depth, 0, "max_depth")
    validate_min_int(min_samples_leaf, 1, "min_samples_leaf")

    initial = float(y.mean())
    prediction = np.full(y.shape[0], initial)
    trees = []
    train_rmse = [rmse(y, prediction)]
    for _ in range(n_estimators):
        tree = tree_fit(x, y - prediction, max_depth, min_samples_leaf)
        prediction = prediction + learning_rate * tree_predict(tree, x)
        trees.append(tree)
        train_rmse.append(rmse(y, prediction))

    logger.debug("Boosted {} trees; train RMSE {:.3f} → {:.3f}", n_estimators, train_rmse[0], train_rmse[-1])
    return GbmModel(
        initial_prediction=initial,
        trees=tuple(trees),
        learning_rate=float(learning_rate),
        n_estimators=int(n_estimators),
        max_depth=int(max_depth),
        min_samples_leaf=int(min_samples_leaf),
        n_features=x.shape[1],
        train_rmse=tuple(train_rmse),
    )


def staged_predict(m: GbmModel, x) -> Iterator[np.ndarray]:
    """Yield the prediction after each stage, starting from F₀."""
    x = as_matrix(x)
    validate_feature_count(x, m.n_features)
    prediction = np.full(x.shape[0], m.initial_prediction)
    yield prediction
    for tree in m.trees:
        prediction = prediction + m.learning_rate * tree_predict(tree, x)
        yield prediction


def gbm_predict(m: GbmModel, x) -> np.ndarray:
    return deque(staged_predict(m, x), maxlen=1)[0]
