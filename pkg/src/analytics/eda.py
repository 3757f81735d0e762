"""Exploratory data analysis: descriptive statistics, box plots, outlier filtering.

Quartiles use linear interpolation of the order statistics at p·(n−1);
fences are Tukey fences with a fixed 1.5 multiplier.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
import pandas as pd
from loguru import logger

from src.analytics.models import BoxPlotSummary
from src.data.ingest import Dataset
from src.data.schema import NUMERIC_COLUMNS, column_spec
from src.errors import EmptyInput, TypeMismatch

FENCE_MULTIPLIER = 1.5


def _as_values(values: Sequence[float]) -> np.ndarray:
    arr = np.asarray(values, dtype=float).ravel()
    if arr.size == 0:
        raise EmptyInput("values must be non-empty")
    return arr


def quartiles(values: Sequence[float]) -> tuple[float, float, float]:
    """(q1, median, q3) by linear interpolation."""
    arr = _as_values(values)
    q1, median, q3 = np.quantile(arr, [0.25, 0.5, 0.75], method="linear")
    return float(q1), float(median), float(q3)


def box_summary(values: Sequence[float]) -> BoxPlotSummary:
    arr = _as_values(values)
    q1, median, q3 = quartiles(arr)
    iqr = q3 - q1
    lower_fence = q1 - FENCE_MULTIPLIER * iqr
    upper_fence = q3 + FENCE_MULTIPLIER * iqr

    inside = (arr >= lower_fence) & (arr <= upper_fence)
    # the median always lies within the fences, so `inside` is never empty
    in_fence = arr[inside]
    return BoxPlotSummary(
        q1=q1,
        median=median,
        q3=q3,
        iqr=iqr,
        lower_fence=lower_fence,
        upper_fence=upper_fence,
        whisker_low=float(in_fence.min()),
        whisker_high=float(in_fence.max()),
        outliers=[float(v) for v in np.sort(arr[~inside])],
        n=int(arr.size),
    )


def fence_threshold(values: Sequence[float]) -> float:
    """Upper Tukey fence of a sample: the IQR-derived outlier cutoff."""
    return box_summary(values).upper_fence


def _numeric_column(d: Dataset, col: str) -> pd.Series:
    series = d.column(col)
    spec = column_spec(col)
    if spec is None or not spec.is_numeric:
        raise TypeMismatch(f"{col} is not numeric")
    return series


def grouped_box(d: Dataset, value_col: str, group_col: str) -> dict[str, BoxPlotSummary]:
    """One box summary of ``value_col`` per distinct value of ``group_col``.

    Groups come back in category order (or ascending for count columns).
    """
    values = _numeric_column(d, value_col)
    groups = d.column(group_col)
    spec = column_spec(group_col)
    if spec is None or not spec.is_groupable:
        raise TypeMismatch(f"{group_col} cannot be used as a grouping column")

    result = {}
    for key, group in values.groupby(groups, observed=True, sort=True):
        result[str(key)] = box_summary(group.to_numpy())
    logger.debug("Grouped {} by {} into {} boxes", value_col, group_col, len(result))
    return result


def filter_threshold(d: Dataset, col: str, max_value: float) -> Dataset:
    """Keep the rows with ``col <= max_value``, order preserved."""
    values = _numeric_column(d, col)
    filtered = d.take(values.to_numpy() <= max_value)
    logger.info("Filter {} <= {:g}: {} → {} rows", col, max_value, d.n_rows, filtered.n_rows)
    return filtered


def median_separation(a: BoxPlotSummary, b: BoxPlotSummary) -> bool:
    """True when each group's median falls outside the other group's box."""
    a_outside_b = not (b.q1 <= a.median <= b.q3)
    b_outside_a = not (a.q1 <= b.median <= a.q3)
    return a_outside_b and b_outside_a


def describe(d: Dataset) -> pd.DataFrame:
    """Descriptive statistics of the numeric columns.

    Returns one row per column: count, mean, std (sample), min, q1, median, q3, max.
    """
    rows = []
    for col in NUMERIC_COLUMNS:
        if col not in d.columns:
            continue
        arr = d.frame[col].to_numpy(dtype=float)
        if arr.size == 0:
            rows.append({"column": col, "count": 0})
            continue
        q1, median, q3 = quartiles(arr)
        rows.append({
            "column": col,
            "count": int(arr.size),
            "mean": float(arr.mean()),
            "std": float(arr.std(ddof=1)) if arr.size > 1 else 0.0,
            "min": float(arr.min()),
            "q1": q1,
            "median": median,
            "q3": q3,
            "max": float(arr.max()),
        })
    return pd.DataFrame(rows).set_index("column")


def column_values(d: Dataset, col: str) -> np.ndarray:
    return _numeric_column(d, col).to_numpy(dtype=float)
