"""Data classes for evaluation results."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class MetricPair:
    r2: float
    rmse: float  # USD

    def to_dict(self) -> dict:
        return {"r2": self.r2, "rmse": self.rmse}


@dataclass
class FoldScore:
    index: int
    size: int
    r2: Optional[float]  # None when the fold's observed values are constant
    rmse: float
    mse: float
    tss: float

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "size": self.size,
            "r2": self.r2,
            "rmse": self.rmse,
            "mse": self.mse,
            "tss": self.tss,
        }


@dataclass
class CvReport:
    k: int
    seed: int
    fold_scores: list[FoldScore] = field(default_factory=list)
    weighted_mean_r2: Optional[float] = None

    @property
    def n(self) -> int:
        return sum(f.size for f in self.fold_scores)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "seed": self.seed,
            "weighted_mean_r2": self.weighted_mean_r2,
            "folds": [f.to_dict() for f in self.fold_scores],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> CvReport:
        return cls(
            k=int(payload["k"]),
            seed=int(payload["seed"]),
            weighted_mean_r2=payload.get("weighted_mean_r2"),
            fold_scores=[FoldScore(**fold) for fold in payload["folds"]],
        )
