"""Pydantic configuration schemas."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


# --- Settings ---

class LoggingSettings(BaseModel):
    level: str = "INFO"
    log_file: Optional[str] = None
    rotation: str = "10 MB"
    retention: str = "30 days"

    @field_validator("level")
    @classmethod
    def _upper_level(cls, v: str) -> str:
        v = v.upper()
        if v not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {v}")
        return v


class Settings(BaseModel):
    logging: LoggingSettings = LoggingSettings()


# --- Pipeline ---

CvScope = Literal["filtered_full", "train_only"]


class PipelineConfig(BaseModel):
    """One experiment, as a flat mapping of keys to values."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    input_path: Optional[str] = None
    outlier_threshold: float = Field(default=17500.0, ge=0)
    split_ratio: float = Field(default=0.8, gt=0, lt=1)
    seed: int = Field(default=42, ge=0)
    k: int = Field(default=10, ge=2)
    cv_scope: CvScope = "filtered_full"
    output_dir: str = "output"
    expected_filtered_rows: Optional[int] = 1017

    gb_n_estimators: int = Field(default=100, ge=1)
    gb_learning_rate: float = Field(default=0.1, gt=0)
    gb_max_depth: int = Field(default=3, ge=1)
    gb_min_samples_leaf: int = Field(default=1, ge=1)

    svr_c: float = Field(default=1.0, gt=0)
    svr_epsilon: float = Field(default=0.1, ge=0)
    svr_max_iters: int = Field(default=5000, ge=1)
    svr_tol: float = Field(default=1e-8, ge=0)

    def hyperparams(self, kind: str) -> dict:
        """Keyword arguments for the fit function of one model kind."""
        prefix = {"gradient_boosting": "gb_", "svr": "svr_"}.get(kind)
        if prefix is None:
            return {}
        params = {
            name[len(prefix):]: getattr(self, name)
            for name in type(self).model_fields
            if name.startswith(prefix)
        }
        return params
