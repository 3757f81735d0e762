"""CART regression tree grown by greedy variance reduction.

Candidate thresholds are midpoints between consecutive distinct sorted values
of a feature. Ties go to the lowest feature index, then the smallest
threshold. A node becomes a leaf at ``max_depth``, when no split leaves
``min_samples_leaf`` rows on both sides, or when the best split has no gain.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from src.analytics.regressors.models import RegressionTree
from src.utils.validators import (
    as_matrix,
    validate_feature_count,
    validate_min_int,
    validate_sample_size,
    validate_xy,
)

# Gains below this fraction of the node's squared error are rounding noise,
# and gains closer than _RELATIVE_TIE of it count as ties.
_RELATIVE_MIN_GAIN = 1e-12
_RELATIVE_TIE = 1e-10


def best_split(x: np.ndarray, targets: np.ndarray, min_samples_leaf: int = 1) -> Optional[tuple[int, float, float]]:
    """Best (feature, threshold, gain) for one node, or None when no split helps.

    gain = SSE(node) − SSE(left) − SSE(right).
    """
    n, d = x.shape
    centered = targets - targets.mean()
    parent_sse = float(centered @ centered)
    if n < 2 * min_samples_leaf or parent_sse <= 0:
        return None

    n_left = np.arange(1, n)
    n_right = n - n_left
    size_ok = (n_left >= min_samples_leaf) & (n_right >= min_samples_leaf)

    min_gain = _RELATIVE_MIN_GAIN * parent_sse
    tie = _RELATIVE_TIE * parent_sse
    best: Optional[tuple[int, float, float]] = None
    best_gain = -np.inf
    for j in range(d):
        order = np.argsort(x[:, j], kind="stable")
        xs = x[order, j]
        ys = centered[order]

        valid = size_ok & (xs[:-1] < xs[1:])
        if not valid.any():
            continue

        csum = np.cumsum(ys)
        csq = np.cumsum(ys * ys)
        s_left, q_left = csum[:-1], csq[:-1]
        s_right, q_right = csum[-1] - s_left, csq[-1] - q_left
        child_sse = (q_left - s_left ** 2 / n_left) + (q_right - s_right ** 2 / n_right)
        gain = np.where(valid, parent_sse - child_sse, -np.inf)

        top = float(gain.max())
        if top <= min_gain or top <= best_gain + tie:
            continue
        i = int(np.argmax(gain >= top - tie))
        best_gain = top
        best = (j, float((xs[i] + xs[i + 1]) / 2), float(gain[i]))
    return best


def tree_fit(x, targets, max_depth: int = 3, min_samples_leaf: int = 1) -> RegressionTree:
    x, targets = validate_xy(x, targets)
    validate_sample_size(x.shape[0], 1)
    validate_min_int(max_depth, 0, "max_depth")
    validate_min_int(min_samples_leaf, 1, "min_samples_leaf")

    feature: list[int] = []
    threshold: list[float] = []
    left: list[int] = []
    right: list[int] = []
    value: list[float] = []
    n_samples: list[int] = []

    def grow(idx: np.ndarray, depth: int) -> int:
        node = len(feature)
        feature.append(-1)
        threshold.append(0.0)
        left.append(-1)
        right.append(-1)
        value.append(float(targets[idx].mean()))
        n_samples.append(int(idx.size))

        if depth >= max_depth:
            return node
        split = best_split(x[idx], targets[idx], min_samples_leaf)
        if split is None:
            return node

        j, thr, _ = split
        go_left = x[idx, j] <= thr
        feature[node] = j
        threshold[node] = thr
        left[node] = grow(idx[go_left], depth + 1)
        right[node] = grow(idx[~go_left], depth + 1)
        return node

    grow(np.arange(x.shape[0]), 0)
    return RegressionTree(
        feature=np.asarray(feature, dtype=int),
        threshold=np.asarray(threshold, dtype=float),
        left=np.asarray(left, dtype=int),
        right=np.asarray(right, dtype=int),
        value=np.asarray(value, dtype=float),
        n_samples=np.asarray(n_samples, dtype=int),
        n_features=x.shape[1],
    )


def tree_predict(t: RegressionTree, x) -> np.ndarray:
    """Route every row from the root to its leaf; ``<=`` goes left."""
    x = as_matrix(x)
    validate_feature_count(x, t.n_features)
    rows = np.arange(x.shape[0])
    node = np.zeros(x.shape[0], dtype=int)
    active = t.feature[node] >= 0
    while active.any():
        at = node[active]
        go_left = x[rows[active], t.feature[at]] <= t.threshold[at]
        node[active] = np.where(go_left, t.left[at], t.right[at])
        active = t.feature[node] >= 0
    return t.value[node]
