"""Linear epsilon-insensitive support vector regression.

The target is standardized internally. Training minimizes

    ½‖w‖² + c·Σ max(0, |yᵢ − w·xᵢ − b| − ϵ)

divided through by c·n (same minimizer, step size independent of n) with
deterministic full-batch subgradient descent, step ``step_size/√t`` and
suffix averaging restarted at every power of two. The returned parameters
are the best iterate (plain or averaged) seen, so the final objective never
exceeds the starting one.
"""

from __future__ import annotations

import math

import numpy as np
from loguru import logger

from src.analytics.regressors.models import SvrModel
from src.utils.validators import (
    as_matrix,
    validate_feature_count,
    validate_min_int,
    validate_non_negative,
    validate_positive,
    validate_sample_size,
    validate_xy,
)

DEFAULT_C = 1.0
DEFAULT_EPSILON = 0.1
DEFAULT_MAX_ITERS = 5000
DEFAULT_TOL = 1e-8
DEFAULT_STEP_SIZE = 0.5
PATIENCE = 500


def svr_objective(w: np.ndarray, b: float, x: np.ndarray, ys: np.ndarray, c: float, epsilon: float) -> float:
    """Objective divided by c·n, on the standardized target ``ys``."""
    residual = ys - x @ w - b
    loss = np.maximum(0.0, np.abs(residual) - epsilon).mean()
    return float(0.5 * (w @ w) / (c * x.shape[0]) + loss)


def svr_fit(
    x,
    y,
    c: float = DEFAULT_C,
    epsilon: float = DEFAULT_EPSILON,
    max_iters: int = DEFAULT_MAX_ITERS,
    tol: float = DEFAULT_TOL,
    step_size: float = DEFAULT_STEP_SIZE,
) -> SvrModel:
    """Fit a linear SVR.

    Stops after ``max_iters`` iterations, at a zero subgradient, or once the
    best objective improved by less than ``tol`` over the last PATIENCE
    iterations. ``converged`` is False only when ``max_iters`` ran out.
    """
    x, y = validate_xy(x, y)
    validate_sample_size(x.shape[0], 2)
    validate_positive(c, "c")
    validate_non_negative(epsilon, "epsilon")
    validate_min_int(max_iters, 1, "max_iters")
    validate_positive(step_size, "step_size")

    y_mean = float(y.mean())
    y_std = float(y.std())
    if y_std == 0:
        y_std = 1.0
    ys = (y - y_mean) / y_std
    n, d = x.shape
    reg = 1.0 / (c * n)

    w = np.zeros(d)
    b = 0.0
    initial_objective = svr_objective(w, b, x, ys, c, epsilon)
    best_obj, best_w, best_b = initial_objective, w.copy(), b
    trace = [initial_objective]

    avg_w, avg_b, avg_count, restart_at = w.copy(), b, 0, 1
    checkpoint_obj = best_obj
    converged = False
    t = 0
    for t in range(1, max_iters + 1):
        residual = ys - x @ w - b
        s = np.where(np.abs(residual) > epsilon, np.sign(residual), 0.0)
        grad_w = reg * w - (x.T @ s) / n
        grad_b = -float(s.mean())
        if not grad_w.any() and grad_b == 0.0:
            converged = True
            break

        eta = step_size / math.sqrt(t)
        w = w - eta * grad_w
        b = b - eta * grad_b

        if t == restart_at:
            avg_w, avg_b, avg_count = w.copy(), b, 1
            restart_at *= 2
        else:
            avg_count += 1
            avg_w = avg_w + (w - avg_w) / avg_count
            avg_b = avg_b + (b - avg_b) / avg_count

        for cand_w, cand_b in ((w, b), (avg_w, avg_b)):
            obj = svr_objective(cand_w, cand_b, x, ys, c, epsilon)
            if obj < best_obj:
                best_obj, best_w, best_b = obj, cand_w.copy(), cand_b

        if t % PATIENCE == 0:
            trace.append(best_obj)
            if checkpoint_obj - best_obj < tol:
                converged = True
                break
            checkpoint_obj = best_obj

    if not converged:
        logger.warning("SVR did not converge in {} iterations (objective {:.6g})", max_iters, best_obj)
    else:
        logger.debug("SVR stopped after {} iterations (objective {:.6g})", t, best_obj)

    return SvrModel(
        w=best_w,
        b=float(best_b),
        epsilon=float(epsilon),
        c=float(c),
        y_mean=y_mean,
        y_std=y_std,
        converged=converged,
        n_iter=t,
        objective=best_obj,
        initial_objective=initial_objective,
        objective_trace=tuple(trace),
    )


def svr_predict(m: SvrModel, x) -> np.ndarray:
    """(w·x + b)·y_std + y_mean, in target units."""
    x = as_matrix(x)
    validate_feature_count(x, m.n_features)
    return (x @ m.w + m.b) * m.y_std + m.y_mean
