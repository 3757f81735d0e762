"""Ordinary least squares via a reduced QR decomposition of the design matrix."""

from __future__ import annotations

import numpy as np
from scipy.linalg import solve_triangular

from src.analytics.regressors.models import LinearModel
from src.errors import RankDeficient
from src.utils.validators import as_matrix, validate_feature_count, validate_sample_size, validate_xy


def _design(x: np.ndarray) -> np.ndarray:
    return np.column_stack([np.ones(x.shape[0]), x])


def ols_fit(x, y) -> LinearModel:
    """Minimize Σ(yᵢ − β₀ − β·xᵢ)².

    Solves R·β = Qᵀy for the design matrix [1 | x] = QR; rank is judged from
    the diagonal of R.
    """
    x, y = validate_xy(x, y)
    validate_sample_size(x.shape[0], 2)
    design = _design(x)
    n, p = design.shape
    if n < p:
        raise RankDeficient(f"{n} rows cannot determine {p} parameters")

    q, r = np.linalg.qr(design, mode="reduced")
    diag = np.abs(np.diag(r))
    tol = max(n, p) * np.finfo(float).eps * diag.max()
    if (diag <= tol).any():
        raise RankDeficient(f"design matrix is rank deficient (min |R_ii| = {diag.min():.3g})")

    beta = solve_triangular(r, q.T @ y, lower=False)
    return LinearModel(intercept=float(beta[0]), coefficients=beta[1:].copy())


def linear_predict(m: LinearModel, x) -> np.ndarray:
    x = as_matrix(x)
    validate_feature_count(x, m.n_features)
    return m.intercept + x @ m.coefficients
