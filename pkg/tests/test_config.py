"""Tests for settings and pipeline configuration loading."""

import pytest
import yaml

from src.config.loader import (
    SEED_ENV_VAR,
    dump_pipeline_config,
    load_pipeline_config,
    load_settings,
    save_pipeline_config,
)
from src.config.models import PipelineConfig
from src.errors import UsageError


class TestDefaults:
    def test_pipeline_defaults(self):
        c = load_pipeline_config(env={})
        assert c.outlier_threshold == 17500
        assert c.split_ratio == 0.8
        assert c.seed == 42
        assert c.k == 10
        assert c.cv_scope == "filtered_full"
        assert c.expected_filtered_rows == 1017

    def test_packaged_yaml_matches_model_defaults(self):
        assert load_pipeline_config(env={}) == PipelineConfig()

    def test_settings(self):
        assert load_settings().logging.level == "INFO"

    def test_hyperparams(self):
        c = PipelineConfig()
        assert c.hyperparams("gradient_boosting") == {
            "n_estimators": 100, "learning_rate": 0.1, "max_depth": 3, "min_samples_leaf": 1,
        }
        assert c.hyperparams("svr") == {"c": 1.0, "epsilon": 0.1, "max_iters": 5000, "tol": 1e-8}
        assert c.hyperparams("linear_regression") == {}


class TestPrecedence:
    def test_file_overrides_defaults(self, tmp_path):
        path = tmp_path / "c.yaml"
        path.write_text("k: 5\nsplit_ratio: 0.7\n")
        c = load_pipeline_config(path, env={})
        assert (c.k, c.split_ratio, c.seed) == (5, 0.7, 42)

    def test_env_seed_overrides_file(self, tmp_path):
        path = tmp_path / "c.yaml"
        path.write_text("seed: 1\n")
        assert load_pipeline_config(path, env={SEED_ENV_VAR: "7"}).seed == 7

    def test_flag_overrides_env(self):
        assert load_pipeline_config(overrides={"seed": 3}, env={SEED_ENV_VAR: "7"}).seed == 3

    def test_none_overrides_ignored(self):
        assert load_pipeline_config(overrides={"seed": None, "k": None}, env={}).k == 10

    def test_bad_env_seed(self):
        with pytest.raises(UsageError, match=SEED_ENV_VAR):
            load_pipeline_config(env={SEED_ENV_VAR: "abc"})

    def test_reads_process_environment(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "99")
        assert load_pipeline_config().seed == 99


class TestValidation:
    @pytest.mark.parametrize("overrides", [
        {"split_ratio": 1.0},
        {"split_ratio": 0.0},
        {"k": 1},
        {"outlier_threshold": -1.0},
        {"cv_scope": "everything"},
        {"gb_learning_rate": 0.0},
        {"svr_c": -1.0},
    ])
    def test_rejected(self, overrides):
        with pytest.raises(UsageError):
            load_pipeline_config(overrides=overrides, env={})

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "c.yaml"
        path.write_text("learning_rate: 0.5\n")
        with pytest.raises(UsageError, match="learning_rate"):
            load_pipeline_config(path, env={})

    def test_missing_file(self, tmp_path):
        with pytest.raises(UsageError):
            load_pipeline_config(tmp_path / "absent.yaml", env={})

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "c.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(UsageError):
            load_pipeline_config(path, env={})


class TestRoundTrip:
    def test_dump_is_flat(self):
        payload = yaml.safe_load(dump_pipeline_config(PipelineConfig()))
        assert all(not isinstance(v, (dict, list)) for v in payload.values())

    def test_lossless(self, tmp_path):
        c = PipelineConfig(input_path="data/x.csv", seed=123, k=7, split_ratio=0.75, cv_scope="train_only",
                           svr_tol=1e-11, gb_learning_rate=0.05, outlier_threshold=12345.678)
        path = save_pipeline_config(tmp_path / "c.yaml", c)
        assert load_pipeline_config(path, env={}) == c
