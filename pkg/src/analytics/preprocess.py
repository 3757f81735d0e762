"""Transformation stage: label encoding, train/test split, standardization."""

from __future__ import annotations

import math

import numpy as np
import pandas as pd
from loguru import logger

from src.analytics.models import EncodedMatrix, ScalerParams, Split
from src.data.ingest import Dataset
from src.data.schema import FEATURE_COLUMNS, SCHEMA, TARGET
from src.errors import BadRatio, DimensionMismatch, EmptyInput, SchemaMismatch
from src.utils.validators import as_matrix

DEFAULT_SEED = 42


def encode_features(d: Dataset) -> np.ndarray:
    """n × 6 float matrix in FEATURE_COLUMNS order, categories as their codes."""
    columns = []
    for spec in SCHEMA:
        if spec.name == TARGET:
            continue
        if spec.name not in d.columns:
            raise SchemaMismatch(f"missing column {spec.name}")
        series = d.frame[spec.name]
        if spec.kind == "category":
            if not (isinstance(series.dtype, pd.CategoricalDtype)
                    and tuple(series.cat.categories) == spec.levels):
                raise SchemaMismatch(f"{spec.name} must be categorical over {list(spec.levels)}")
            codes = series.cat.codes.to_numpy()
            if (codes < 0).any():
                raise SchemaMismatch(f"{spec.name} has missing values")
            columns.append(codes.astype(float))
        else:
            columns.append(series.to_numpy(dtype=float))
    if not columns[0].size:
        return np.empty((0, len(FEATURE_COLUMNS)))
    return np.column_stack(columns)


def encode(d: Dataset) -> EncodedMatrix:
    """Split a Dataset into encoded features x and the charges target y."""
    if TARGET not in d.columns:
        raise SchemaMismatch(f"missing target column {TARGET}")
    return EncodedMatrix(
        x=encode_features(d),
        y=d.frame[TARGET].to_numpy(dtype=float),
        feature_names=FEATURE_COLUMNS,
    )


def split(m: EncodedMatrix, ratio: float = 0.8, seed: int = DEFAULT_SEED) -> Split:
    """Seeded shuffle; the first floor(ratio·n) shuffled rows are the training set."""
    if not 0 < ratio < 1:
        raise BadRatio(f"ratio must be in (0, 1), got {ratio}")
    n = m.n_rows
    if n == 0:
        raise EmptyInput("cannot split an empty matrix")

    order = np.random.default_rng(seed).permutation(n)
    n_train = math.floor(ratio * n)
    train_index, test_index = order[:n_train], order[n_train:]
    logger.debug("Split {} rows → {} train / {} test (seed={})", n, n_train, n - n_train, seed)
    return Split(
        x_train=m.x[train_index],
        y_train=m.y[train_index],
        x_test=m.x[test_index],
        y_test=m.y[test_index],
        seed=seed,
        ratio=ratio,
        train_index=train_index,
        test_index=test_index,
    )


def scaler_fit(x_train) -> ScalerParams:
    x = as_matrix(x_train, "x_train")
    if x.shape[0] == 0:
        raise EmptyInput("cannot fit a scaler on zero rows")
    # Summation error leaves a tiny std on non-representable constants.
    constant = np.ptp(x, axis=0) == 0
    mean = np.where(constant, x[0], x.mean(axis=0))
    std = np.where(constant, 0.0, x.std(axis=0))
    return ScalerParams(
        mean=tuple(float(v) for v in mean),
        std=tuple(float(v) for v in std),
    )


def scaler_transform(p: ScalerParams, x) -> np.ndarray:
    """(x − mean) / std per column; zero-spread columns map to 0."""
    x = as_matrix(x)
    if x.shape[1] != p.n_features:
        raise DimensionMismatch(f"scaler fitted on {p.n_features} features, got {x.shape[1]}")
    mean = np.asarray(p.mean)
    std = np.asarray(p.std)
    safe_std = np.where(std > 0, std, 1.0)
    return np.where(std > 0, (x - mean) / safe_std, 0.0)
