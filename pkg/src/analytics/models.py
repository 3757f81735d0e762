"""Data classes for EDA and preprocessing results."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np


@dataclass
class BoxPlotSummary:
    q1: float
    median: float
    q3: float
    iqr: float
    lower_fence: float
    upper_fence: float
    whisker_low: float
    whisker_high: float
    outliers: list[float] = field(default_factory=list)
    n: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class EncodedMatrix:
    x: np.ndarray  # n × 6, columns in feature_names order
    y: np.ndarray  # charges, USD
    feature_names: tuple[str, ...] = ()

    @property
    def n_rows(self) -> int:
        return int(self.x.shape[0])


@dataclass
class Split:
    x_train: np.ndarray
    y_train: np.ndarray
    x_test: np.ndarray
    y_test: np.ndarray
    seed: int
    ratio: float
    train_index: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=int))
    test_index: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=int))


@dataclass(frozen=True)
class ScalerParams:
    mean: tuple[float, ...]
    std: tuple[float, ...]  # population convention (divisor n)

    @property
    def n_features(self) -> int:
        return len(self.mean)

    def to_dict(self) -> dict:
        return {"mean": list(self.mean), "std": list(self.std)}

    @classmethod
    def from_dict(cls, payload: dict) -> ScalerParams:
        return cls(mean=tuple(float(v) for v in payload["mean"]),
                   std=tuple(float(v) for v in payload["std"]))


@dataclass
class PreparedData:
    """The filtered, encoded and split data every command works from."""

    raw_rows: int
    filtered_rows: int
    encoded: EncodedMatrix
    split: Split
    scaler: ScalerParams
