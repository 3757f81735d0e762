"""Data classes for assembled reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from src.analytics.evaluation.models import CvReport, MetricPair
from src.analytics.models import BoxPlotSummary


@dataclass
class Counts:
    raw: int
    filtered: int
    train: int
    test: int
    expected_filtered: Optional[int] = None

    @property
    def filtered_matches_expected(self) -> Optional[bool]:
        if self.expected_filtered is None:
            return None
        return self.filtered == self.expected_filtered

    def to_dict(self) -> dict:
        return {
            "raw": self.raw,
            "filtered": self.filtered,
            "train": self.train,
            "test": self.test,
            "expected_filtered": self.expected_filtered,
            "filtered_matches_expected": self.filtered_matches_expected,
        }


@dataclass
class ModelResult:
    kind: str
    label: str
    test: MetricPair
    cv: CvReport
    cv_scope: str = "filtered_full"
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "label": self.label,
            "r2": self.test.r2,
            "rmse": self.test.rmse,
            "cv": {"scope": self.cv_scope, **self.cv.to_dict()},
            "diagnostics": self.diagnostics,
        }


@dataclass
class EvalReport:
    config: dict[str, Any]
    counts: Counts
    models: list[ModelResult]
    generated_at: str = ""

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "counts": self.counts.to_dict(),
            "models": [m.to_dict() for m in self.models],
            "generated_at": self.generated_at,
        }


@dataclass
class SeparationCheck:
    """Smoker vs non-smoker charges: does each median sit outside the other box?"""

    separated: bool
    smoker_median: float
    non_smoker_q1: float
    non_smoker_q3: float
    smoker_q1: float
    non_smoker_median: float

    @property
    def smoker_median_above_box(self) -> bool:
        return self.smoker_median > self.non_smoker_q3

    def to_dict(self) -> dict:
        return {
            "separated": self.separated,
            "smoker_median_above_non_smoker_q3": self.smoker_median_above_box,
            "smoker_median": self.smoker_median,
            "smoker_q1": self.smoker_q1,
            "non_smoker_median": self.non_smoker_median,
            "non_smoker_q1": self.non_smoker_q1,
            "non_smoker_q3": self.non_smoker_q3,
        }


@dataclass
class EdaReport:
    config: dict[str, Any]
    raw_rows: int
    filtered_rows: int
    describe: dict[str, dict[str, float]]
    charges_fence: float
    charges_box: dict[str, BoxPlotSummary]  # stage -> summary
    boxes: dict[str, dict[str, dict[str, BoxPlotSummary]]]  # stage -> group column -> level
    separation: Optional[SeparationCheck] = None

    def boxes_to_dict(self, stage: str) -> dict:
        return {
            "stage": stage,
            "charges": self.charges_box[stage].to_dict(),
            "groups": {
                col: {level: s.to_dict() for level, s in by_level.items()}
                for col, by_level in self.boxes[stage].items()
            },
        }

    def summary_to_dict(self) -> dict:
        return {
            "config": self.config,
            "counts": {"raw": self.raw_rows, "filtered": self.filtered_rows},
            "describe": self.describe,
            "charges_upper_fence": self.charges_fence,
            "outlier_threshold": self.config.get("outlier_threshold"),
            "smoker_separation": None if self.separation is None else self.separation.to_dict(),
        }
