"""Fitted regressor parameters."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class LinearModel:
    intercept: float
    coefficients: np.ndarray

    @property
    def n_features(self) -> int:
        return int(self.coefficients.shape[0])


@dataclass(frozen=True, eq=False)
class RegressionTree:
    """Array-encoded binary tree; node 0 is the root.

    Internal nodes have ``feature >= 0`` and route ``x[feature] <= threshold``
    to ``left``; leaves have ``feature == -1`` and predict ``value``.
    """

    feature: np.ndarray
    threshold: np.ndarray
    left: np.ndarray
    right: np.ndarray
    value: np.ndarray
    n_samples: np.ndarray
    n_features: int

    @property
    def n_nodes(self) -> int:
        return int(self.feature.shape[0])

    @property
    def is_leaf(self) -> np.ndarray:
        return self.feature < 0

    @property
    def n_leaves(self) -> int:
        return int(self.is_leaf.sum())

    def depth(self) -> int:
        depths = np.zeros(self.n_nodes, dtype=int)
        # children are always appended after their parent
        for node in range(self.n_nodes):
            if self.feature[node] >= 0:
                depths[self.left[node]] = depths[node] + 1
                depths[self.right[node]] = depths[node] + 1
        return int(depths.max()) if self.n_nodes else 0


@dataclass(frozen=True, eq=False)
class GbmModel:
    initial_prediction: float
    trees: tuple[RegressionTree, ...]
    learning_rate: float
    n_estimators: int
    max_depth: int
    min_samples_leaf: int
    n_features: int
    train_rmse: tuple[float, ...] = ()  # stage 0 (constant model) through stage M

    @property
    def hyperparams(self) -> dict:
        return {
            "n_estimators": self.n_estimators,
            "learning_rate": self.learning_rate,
            "max_depth": self.max_depth,
            "min_samples_leaf": self.min_samples_leaf,
        }


@dataclass(frozen=True, eq=False)
class SvrModel:
    """Linear epsilon-SVR; w and b live in standardized-target units."""

    w: np.ndarray
    b: float
    epsilon: float
    c: float
    y_mean: float
    y_std: float
    converged: bool = True
    n_iter: int = 0
    objective: float = 0.0
    initial_objective: float = 0.0
    objective_trace: tuple[float, ...] = field(default=())

    @property
    def n_features(self) -> int:
        return int(self.w.shape[0])

    @property
    def coefficients(self) -> np.ndarray:
        """Weights in target units (USD per feature unit)."""
        return self.w * self.y_std

    @property
    def intercept(self) -> float:
        return self.b * self.y_std + self.y_mean
