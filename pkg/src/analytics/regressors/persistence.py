"""Versioned JSON model documents.

A document bundles the fitted model with the scaler and the category
encoding table, so raw records can be scored without the training data:

    {format_version, model_kind, params, scaler, encoding_table, feature_names}

Floats are written with ``repr`` precision, so a loaded model predicts
bit-identically to the one that was saved.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from src.analytics.models import ScalerParams
from src.analytics.regressors.models import GbmModel, LinearModel, RegressionTree, SvrModel
from src.analytics.regressors.registry import MODEL_KINDS, Model, kind_of
from src.data.schema import FEATURE_COLUMNS, encoding_table
from src.errors import ModelFormatError

FORMAT_VERSION = 1


def _tree_to_dict(t: RegressionTree) -> dict:
    return {
        "feature": t.feature.tolist(),
        "threshold": t.threshold.tolist(),
        "left": t.left.tolist(),
        "right": t.right.tolist(),
        "value": t.value.tolist(),
        "n_samples": t.n_samples.tolist(),
    }


def _tree_from_dict(payload: dict, n_features: int) -> RegressionTree:
    return RegressionTree(
        feature=np.asarray(payload["feature"], dtype=int),
        threshold=np.asarray(payload["threshold"], dtype=float),
        left=np.asarray(payload["left"], dtype=int),
        right=np.asarray(payload["right"], dtype=int),
        value=np.asarray(payload["value"], dtype=float),
        n_samples=np.asarray(payload["n_samples"], dtype=int),
        n_features=n_features,
    )


def model_params(model: Model) -> dict:
    if isinstance(model, LinearModel):
        return {"intercept": model.intercept, "coefficients": model.coefficients.tolist()}
    if isinstance(model, GbmModel):
        return {
            **model.hyperparams,
            "initial_prediction": model.initial_prediction,
            "n_features": model.n_features,
            "trees": [_tree_to_dict(t) for t in model.trees],
            "train_rmse": list(model.train_rmse),
        }
    return {
        "w": model.w.tolist(),
        "b": model.b,
        "epsilon": model.epsilon,
        "c": model.c,
        "y_mean": model.y_mean,
        "y_std": model.y_std,
        "converged": model.converged,
        "n_iter": model.n_iter,
        "objective": model.objective,
    }


def model_from_params(kind: str, params: dict) -> Model:
    if kind == "linear_regression":
        return LinearModel(
            intercept=float(params["intercept"]),
            coefficients=np.asarray(params["coefficients"], dtype=float),
        )
    if kind == "gradient_boosting":
        n_features = int(params["n_features"])
        return GbmModel(
            initial_prediction=float(params["initial_prediction"]),
            trees=tuple(_tree_from_dict(t, n_features) for t in params["trees"]),
            learning_rate=float(params["learning_rate"]),
            n_estimators=int(params["n_estimators"]),
            max_depth=int(params["max_depth"]),
            min_samples_leaf=int(params["min_samples_leaf"]),
            n_features=n_features,
            train_rmse=tuple(float(v) for v in params.get("train_rmse", ())),
        )
    return SvrModel(
        w=np.asarray(params["w"], dtype=float),
        b=float(params["b"]),
        epsilon=float(params["epsilon"]),
        c=float(params["c"]),
        y_mean=float(params["y_mean"]),
        y_std=float(params["y_std"]),
        converged=bool(params.get("converged", True)),
        n_iter=int(params.get("n_iter", 0)),
        objective=float(params.get("objective", 0.0)),
    )


def model_document(model: Model, scaler: ScalerParams) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "model_kind": kind_of(model),
        "params": model_params(model),
        "scaler": scaler.to_dict(),
        "encoding_table": encoding_table(),
        "feature_names": list(FEATURE_COLUMNS),
    }


def parse_model_document(payload: dict) -> tuple[Model, ScalerParams]:
    version = payload.get("format_version")
    if version != FORMAT_VERSION:
        raise ModelFormatError(f"unsupported model format_version {version!r}; expected {FORMAT_VERSION}")
    if payload.get("encoding_table") != encoding_table():
        raise ModelFormatError("model was saved with a different category encoding")
    if payload.get("feature_names") != list(FEATURE_COLUMNS):
        raise ModelFormatError(f"model features {payload.get('feature_names')!r} != {list(FEATURE_COLUMNS)}")
    kind = payload.get("model_kind")
    if kind not in MODEL_KINDS:
        raise ModelFormatError(f"unknown model_kind {kind!r}")
    try:
        model = model_from_params(kind, payload["params"])
        scaler = ScalerParams.from_dict(payload["scaler"])
    except (KeyError, TypeError, ValueError) as e:
        raise ModelFormatError(f"malformed model document: {e}") from e

    n_features = len(FEATURE_COLUMNS)
    if model.n_features != n_features or scaler.n_features != n_features or len(scaler.std) != n_features:
        raise ModelFormatError(
            f"model expects {model.n_features} features and scaler {scaler.n_features}; need {n_features}"
        )
    return model, scaler


def load_model(path: str | Path) -> tuple[Model, ScalerParams]:
    try:
        with open(path) as f:
            payload = json.load(f)
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"{path} is not valid JSON: {e}") from e
    if not isinstance(payload, dict):
        raise ModelFormatError(f"{path} does not hold a model document")
    return parse_model_document(payload)
