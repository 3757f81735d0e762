"""Model kinds: one name per regressor, dispatching fit and predict."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Union

import numpy as np

from src.analytics.regressors.boosting import gbm_fit, gbm_predict
from src.analytics.regressors.linear import linear_predict, ols_fit
from src.analytics.regressors.models import GbmModel, LinearModel, SvrModel
from src.analytics.regressors.svr import svr_fit, svr_predict
from src.errors import UsageError

Model = Union[GbmModel, LinearModel, SvrModel]

# Report order.
MODEL_KINDS: tuple[str, ...] = ("gradient_boosting", "linear_regression", "svr")

MODEL_LABELS = {
    "gradient_boosting": "Gradient boosting",
    "linear_regression": "Linear regression",
    "svr": "Support vector machine",
}

_FITTERS: dict[str, Callable[..., Model]] = {
    "gradient_boosting": gbm_fit,
    "linear_regression": ols_fit,
    "svr": svr_fit,
}

_PREDICTORS: dict[type, Callable[[Any, np.ndarray], np.ndarray]] = {
    GbmModel: gbm_predict,
    LinearModel: linear_predict,
    SvrModel: svr_predict,
}

_KIND_OF = {GbmModel: "gradient_boosting", LinearModel: "linear_regression", SvrModel: "svr"}


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        check_kind(self.kind)


def check_kind(kind: str) -> str:
    if kind not in _FITTERS:
        raise UsageError(f"Unknown model kind: {kind}. Available: {list(MODEL_KINDS)}")
    return kind


def fit_model(spec: ModelSpec, x, y) -> Model:
    return _FITTERS[spec.kind](x, y, **spec.params)


def predict(model: Model, x) -> np.ndarray:
    return _PREDICTORS[type(model)](model, x)


def kind_of(model: Model) -> str:
    return _KIND_OF[type(model)]
