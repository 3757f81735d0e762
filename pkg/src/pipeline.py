"""End-to-end stages: ingest → filter → encode → split → scale → fit → evaluate.

Every function here computes and returns results; nothing touches the
output directory. Writing is left to the command layer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np
from loguru import logger

from src.analytics.eda import (
    box_summary,
    column_values,
    describe,
    fence_threshold,
    filter_threshold,
    grouped_box,
    median_separation,
)
from src.analytics.evaluation.cross_validation import cross_validate
from src.analytics.evaluation.metrics import evaluate
from src.analytics.evaluation.models import MetricPair
from src.analytics.models import PreparedData, ScalerParams
from src.analytics.preprocess import encode, encode_features, scaler_fit, scaler_transform, split
from src.analytics.regressors.models import GbmModel, LinearModel, SvrModel
from src.analytics.regressors.persistence import load_model
from src.analytics.regressors.registry import (
    MODEL_KINDS,
    MODEL_LABELS,
    Model,
    ModelSpec,
    check_kind,
    fit_model,
    predict,
)
from src.config.models import PipelineConfig
from src.data.ingest import Dataset, read_dataset
from src.data.schema import TARGET
from src.errors import UsageError
from src.reporting.models import Counts, EdaReport, EvalReport, ModelResult, SeparationCheck

EDA_GROUP_COLUMNS = ("region", "children", "sex", "smoker")


@dataclass
class TrainedModel:
    kind: str
    model: Model
    scaler: ScalerParams
    test: MetricPair


def load_input(config: PipelineConfig) -> Dataset:
    if not config.input_path:
        raise UsageError("no input file given (use --input or input_path in the config file)")
    return read_dataset(Path(config.input_path))


def _filter(config: PipelineConfig, d: Dataset) -> Dataset:
    filtered = filter_threshold(d, TARGET, config.outlier_threshold)
    expected = config.expected_filtered_rows
    if expected is not None and filtered.n_rows != expected:
        logger.warning(
            "Filtered row count {} differs from the expected {} (raw rows: {})",
            filtered.n_rows, expected, d.n_rows,
        )
    return filtered


def prepare(config: PipelineConfig, d: Dataset) -> PreparedData:
    filtered = _filter(config, d)
    encoded = encode(filtered)
    s = split(encoded, ratio=config.split_ratio, seed=config.seed)
    return PreparedData(
        raw_rows=d.n_rows,
        filtered_rows=filtered.n_rows,
        encoded=encoded,
        split=s,
        scaler=scaler_fit(s.x_train),
    )


# --- EDA ---

def _describe_dict(d: Dataset) -> dict[str, dict[str, float]]:
    table = describe(d)
    return {
        col: {stat: (int(v) if stat == "count" else float(v)) for stat, v in row.items() if v == v}
        for col, row in table.to_dict(orient="index").items()
    }


def smoker_separation(d: Dataset) -> SeparationCheck | None:
    boxes = grouped_box(d, TARGET, "smoker")
    if "yes" not in boxes or "no" not in boxes:
        logger.warning("Smoker separation needs both smoker groups; got {}", sorted(boxes))
        return None
    yes, no = boxes["yes"], boxes["no"]
    return SeparationCheck(
        separated=median_separation(yes, no),
        smoker_median=yes.median,
        smoker_q1=yes.q1,
        non_smoker_median=no.median,
        non_smoker_q1=no.q1,
        non_smoker_q3=no.q3,
    )


def run_eda(config: PipelineConfig, d: Dataset | None = None) -> EdaReport:
    """Grouped box summaries of charges before and after the outlier filter."""
    d = load_input(config) if d is None else d
    filtered = _filter(config, d)
    stages = {"pre_filter": d, "post_filter": filtered}

    report = EdaReport(
        config=config.model_dump(),
        raw_rows=d.n_rows,
        filtered_rows=filtered.n_rows,
        describe=_describe_dict(d),
        charges_fence=fence_threshold(column_values(d, TARGET)),
        charges_box={stage: box_summary(column_values(ds, TARGET)) for stage, ds in stages.items()},
        boxes={
            stage: {col: grouped_box(ds, TARGET, col) for col in EDA_GROUP_COLUMNS}
            for stage, ds in stages.items()
        },
        separation=smoker_separation(filtered),
    )
    logger.info(
        "EDA: charges upper fence {:.2f} vs threshold {:g}; smoker separation {}",
        report.charges_fence, config.outlier_threshold,
        None if report.separation is None else report.separation.separated,
    )
    return report


# --- Modelling ---

def _diagnostics(model: Model) -> dict:
    if isinstance(model, LinearModel):
        return {"intercept": model.intercept, "coefficients": model.coefficients.tolist()}
    if isinstance(model, GbmModel):
        return {
            "n_trees": len(model.trees),
            "train_rmse_initial": model.train_rmse[0],
            "train_rmse_final": model.train_rmse[-1],
        }
    if isinstance(model, SvrModel):
        return {"converged": model.converged, "n_iter": model.n_iter, "objective": model.objective}
    return {}


def _fit_and_score(config: PipelineConfig, data: PreparedData, kind: str) -> TrainedModel:
    s = data.split
    spec = ModelSpec(kind, config.hyperparams(kind))
    started = time.perf_counter()
    model = fit_model(spec, scaler_transform(data.scaler, s.x_train), s.y_train)
    logger.info("Fitted {} in {:.2f}s", kind, time.perf_counter() - started)
    test = evaluate(s.y_test, predict(model, scaler_transform(data.scaler, s.x_test)))
    logger.info("{} test r2={:.4f} rmse={:.3f}", kind, test.r2, test.rmse)
    return TrainedModel(kind=kind, model=model, scaler=data.scaler, test=test)


def _cv_data(config: PipelineConfig, data: PreparedData) -> tuple[np.ndarray, np.ndarray]:
    if config.cv_scope == "train_only":
        return data.split.x_train, data.split.y_train
    return data.encoded.x, data.encoded.y


def run_experiment(config: PipelineConfig, d: Dataset | None = None) -> EvalReport:
    """Fit all three regressors, score them on the test split and by k-fold CV."""
    d = load_input(config) if d is None else d
    data = prepare(config, d)
    cv_x, cv_y = _cv_data(config, data)

    results = []
    for kind in MODEL_KINDS:
        trained = _fit_and_score(config, data, kind)
        cv = cross_validate(ModelSpec(kind, config.hyperparams(kind)), cv_x, cv_y, k=config.k, seed=config.seed)
        results.append(ModelResult(
            kind=kind,
            label=MODEL_LABELS[kind],
            test=trained.test,
            cv=cv,
            cv_scope=config.cv_scope,
            diagnostics=_diagnostics(trained.model),
        ))

    counts = Counts(
        raw=data.raw_rows,
        filtered=data.filtered_rows,
        train=int(data.split.y_train.size),
        test=int(data.split.y_test.size),
        expected_filtered=config.expected_filtered_rows,
    )
    return EvalReport(
        config=config.model_dump(),
        counts=counts,
        models=results,
        generated_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )


def train_model(config: PipelineConfig, kind: str, d: Dataset | None = None) -> TrainedModel:
    """Fit one regressor on the training split."""
    check_kind(kind)
    d = load_input(config) if d is None else d
    return _fit_and_score(config, prepare(config, d), kind)


def predict_records(model_file: str | Path, records: Dataset) -> np.ndarray:
    """Predicted charges (USD) for feature-only records, using the stored scaler and encoding."""
    model, scaler = load_model(model_file)
    if records.n_rows == 0:
        return np.empty(0)
    return predict(model, scaler_transform(scaler, encode_features(records)))
