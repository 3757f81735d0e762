"""Tests for the versioned model document."""

import json

import numpy as np
import pytest

from src.analytics.preprocess import encode, scaler_fit, scaler_transform
from src.analytics.regressors.persistence import (
    FORMAT_VERSION,
    load_model,
    model_document,
    parse_model_document,
)
from src.analytics.regressors.registry import MODEL_KINDS, ModelSpec, fit_model, kind_of, predict
from src.errors import ModelFormatError, UsageError
from src.utils.io import atomic_write_text, dumps_json

FAST_PARAMS = {
    "gradient_boosting": {"n_estimators": 8},
    "linear_regression": {},
    "svr": {"max_iters": 300},
}


def _save(path, model, scaler):
    return atomic_write_text(path, dumps_json(model_document(model, scaler)))


@pytest.fixture
def scaled(insurance_dataset):
    m = encode(insurance_dataset)
    scaler = scaler_fit(m.x)
    return scaler_transform(scaler, m.x), m.y, scaler


class TestRegistry:
    def test_kinds_in_report_order(self):
        assert MODEL_KINDS == ("gradient_boosting", "linear_regression", "svr")

    def test_unknown_kind(self):
        with pytest.raises(UsageError):
            ModelSpec("random_forest")

    @pytest.mark.parametrize("kind", MODEL_KINDS)
    def test_kind_of_fitted_model(self, scaled, kind):
        x, y, _ = scaled
        assert kind_of(fit_model(ModelSpec(kind, FAST_PARAMS[kind]), x, y)) == kind


class TestSaveLoad:
    @pytest.mark.parametrize("kind", MODEL_KINDS)
    def test_predictions_bit_identical(self, tmp_path, scaled, kind):
        x, y, scaler = scaled
        model = fit_model(ModelSpec(kind, FAST_PARAMS[kind]), x, y)
        path = _save(tmp_path / f"{kind}.json", model, scaler)
        loaded, loaded_scaler = load_model(path)
        assert loaded_scaler == scaler
        assert np.array_equal(predict(loaded, x), predict(model, x))

    def test_document_fields(self, scaled):
        x, y, scaler = scaled
        doc = model_document(fit_model(ModelSpec("linear_regression"), x, y), scaler)
        assert doc["format_version"] == FORMAT_VERSION == 1
        assert doc["model_kind"] == "linear_regression"
        assert doc["encoding_table"]["region"] == {"northeast": 0, "northwest": 1, "southeast": 2, "southwest": 3}
        assert doc["feature_names"] == ["age", "sex", "bmi", "children", "smoker", "region"]
        assert set(doc["scaler"]) == {"mean", "std"}

    def test_gbm_keeps_training_curve(self, tmp_path, scaled):
        x, y, scaler = scaled
        model = fit_model(ModelSpec("gradient_boosting", {"n_estimators": 4}), x, y)
        loaded, _ = load_model(_save(tmp_path / "gbm.json", model, scaler))
        assert loaded.train_rmse == model.train_rmse
        assert loaded.hyperparams == model.hyperparams


class TestRejects:
    @pytest.fixture
    def document(self, scaled):
        x, y, scaler = scaled
        return json.loads(json.dumps(model_document(fit_model(ModelSpec("linear_regression"), x, y), scaler)))

    def test_unknown_version(self, document):
        document["format_version"] = 2
        with pytest.raises(ModelFormatError, match="format_version"):
            parse_model_document(document)

    def test_missing_version(self, document):
        del document["format_version"]
        with pytest.raises(ModelFormatError):
            parse_model_document(document)

    def test_unknown_kind(self, document):
        document["model_kind"] = "random_forest"
        with pytest.raises(ModelFormatError):
            parse_model_document(document)

    def test_changed_encoding(self, document):
        document["encoding_table"]["smoker"] = {"yes": 0, "no": 1}
        with pytest.raises(ModelFormatError, match="encoding"):
            parse_model_document(document)

    def test_missing_params(self, document):
        del document["params"]["coefficients"]
        with pytest.raises(ModelFormatError):
            parse_model_document(document)

    def test_not_json(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text("{not json")
        with pytest.raises(ModelFormatError):
            load_model(path)

    def test_not_an_object(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text("[1, 2, 3]")
        with pytest.raises(ModelFormatError):
            load_model(path)

    def test_non_numeric_value(self, document):
        document["params"]["intercept"] = "abc"
        with pytest.raises(ModelFormatError, match="malformed"):
            parse_model_document(document)

    def test_non_numeric_svr_bias(self, scaled):
        x, y, scaler = scaled
        document = json.loads(json.dumps(model_document(fit_model(ModelSpec("svr", FAST_PARAMS["svr"]), x, y), scaler)))
        document["params"]["b"] = "abc"
        with pytest.raises(ModelFormatError):
            parse_model_document(document)

    def test_short_scaler(self, document):
        document["scaler"]["mean"].pop()
        document["scaler"]["std"].pop()
        with pytest.raises(ModelFormatError, match="features"):
            parse_model_document(document)

    def test_short_coefficients(self, document):
        document["params"]["coefficients"].pop()
        with pytest.raises(ModelFormatError, match="features"):
            parse_model_document(document)

    def test_other_feature_names(self, document):
        document["feature_names"] = ["bmi", "age", "sex", "children", "smoker", "region"]
        with pytest.raises(ModelFormatError, match="features"):
            parse_model_document(document)
