"""CSV ingestion into a typed, validated Dataset.

Tokenizing is row-wise so arity errors can name their row; typing and
range checks are vectorized per column, and the first offending row
(in file order) is the one reported.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import BinaryIO, Optional, Union

import numpy as np
import pandas as pd
from loguru import logger

from src.data.schema import COLUMNS, FEATURE_COLUMNS, SCHEMA, ColumnSpec
from src.errors import MissingHeader, ParseError, RowArity, UnknownColumn

_INTEGER_PATTERN = r"[+-]?\d+"
_DECIMAL_PATTERN = r"[+-]?(?:\d+\.?\d*|\.\d+)"
_MAX_EXACT_INTEGER = 2 ** 53


@dataclass(frozen=True)
class Record:
    age: int
    sex: str
    bmi: float
    children: int
    smoker: str
    region: str
    charges: Optional[float] = None


@dataclass(frozen=True, eq=False)
class Dataset:
    """Column-oriented table of insurance records.

    Categorical columns use a fixed pandas CategoricalDtype whose categories
    are the canonical lowercase levels.
    """

    frame: pd.DataFrame

    @property
    def n_rows(self) -> int:
        return len(self.frame)

    @property
    def columns(self) -> list[str]:
        return list(self.frame.columns)

    @property
    def has_target(self) -> bool:
        return "charges" in self.frame.columns

    def column(self, name: str) -> pd.Series:
        if name not in self.frame.columns:
            raise UnknownColumn(f"Unknown column: {name}. Available: {self.columns}")
        return self.frame[name]

    def records(self) -> list[Record]:
        rows = self.frame.astype(object).to_dict(orient="records")
        return [Record(**row) for row in rows]

    def take(self, mask) -> Dataset:
        return Dataset(self.frame.loc[mask].reset_index(drop=True))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.frame.equals(other.frame) and list(self.frame.dtypes) == list(other.frame.dtypes)

    def __repr__(self) -> str:
        return f"Dataset(n_rows={self.n_rows}, columns={self.columns})"


@dataclass
class ColumnReport:
    name: str
    dtype: str
    non_null: int
    distinct: Optional[int] = None


@dataclass
class SchemaReport:
    n_rows: int
    columns: list[ColumnReport] = field(default_factory=list)

    @property
    def numeric_columns(self) -> list[str]:
        return [c.name for c in self.columns if c.dtype != "category"]

    @property
    def category_columns(self) -> list[str]:
        return [c.name for c in self.columns if c.dtype == "category"]

    @property
    def null_count(self) -> int:
        return sum(self.n_rows - c.non_null for c in self.columns)


def _read_source(source: Union[bytes, BinaryIO]) -> str:
    raw = source if isinstance(source, (bytes, bytearray)) else source.read()
    try:
        text = bytes(raw).decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"input is not valid UTF-8: {e}") from e
    return text.lstrip("\ufeff")


def _typed_column(spec: ColumnSpec, raw: pd.Series) -> tuple[pd.Series, pd.Series, str]:
    """Return (typed values, bad-row mask, failure message) for one column."""
    values = raw.str.strip()
    if spec.kind == "category":
        lowered = values.str.lower()
        bad = ~lowered.isin(spec.levels)
        typed = lowered.where(~bad).astype(pd.CategoricalDtype(list(spec.levels)))
        return typed, bad, f"{spec.name} must be one of {list(spec.levels)}"

    pattern = _DECIMAL_PATTERN if spec.kind == "real" else _INTEGER_PATTERN
    well_formed = values.str.fullmatch(pattern).fillna(False).astype(bool)
    numbers = pd.to_numeric(values.where(well_formed), errors="coerce").astype("float64")
    bad = ~well_formed | ~np.isfinite(numbers)
    if spec.kind != "real":
        # From 2**53 on, floats skip integers and the int64 cast can wrap.
        bad |= numbers.abs() >= _MAX_EXACT_INTEGER
    if spec.min_value is not None:
        bad |= numbers < spec.min_value
    if spec.strictly_positive:
        bad |= numbers <= 0
    dtype = "float64" if spec.kind == "real" else "int64"
    typed = numbers.fillna(0).astype(dtype)
    bound = "> 0" if spec.strictly_positive else f">= {spec.min_value:g}"
    kind = "a decimal number" if spec.kind == "real" else "an integer"
    return typed, bad, f"{spec.name} must be {kind} {bound}"


def parse_csv(source: Union[bytes, BinaryIO], with_target: bool = True) -> Dataset:
    """Parse the medical-cost CSV into a Dataset.

    The header must be exactly ``age,sex,bmi,children,smoker,region,charges``
    (without ``charges`` when ``with_target`` is False). Row numbers in
    errors are 1-based data rows, header excluded.
    """
    expected = COLUMNS if with_target else FEATURE_COLUMNS
    rows = [r for r in csv.reader(_read_source(source).splitlines()) if r]
    if not rows:
        raise MissingHeader(f"missing header; expected {','.join(expected)}")

    header = tuple(h.strip().lower() for h in rows[0])
    if header != expected:
        raise MissingHeader(f"bad header {','.join(header)}; expected {','.join(expected)}")

    body = rows[1:]
    for i, row in enumerate(body, start=1):
        if len(row) != len(expected):
            raise RowArity(f"expected {len(expected)} fields, got {len(row)}", row=i)

    raw = pd.DataFrame(body, columns=list(expected), dtype=str) if body else pd.DataFrame(
        {c: pd.Series(dtype=str) for c in expected}
    )

    typed: dict[str, pd.Series] = {}
    failures: list[tuple[pd.Series, str]] = []
    for spec in SCHEMA:
        if spec.name not in expected:
            continue
        typed[spec.name], bad, message = _typed_column(spec, raw[spec.name])
        failures.append((bad, message))

    if body:
        any_bad = np.logical_or.reduce([bad.to_numpy() for bad, _ in failures])
        if any_bad.any():
            first = int(np.argmax(any_bad))
            message = next(msg for bad, msg in failures if bad.iloc[first])
            raise ParseError(f"{message}; got {body[first]}", row=first + 1)

    frame = pd.DataFrame(typed, columns=list(expected))
    logger.debug("Parsed {} rows", len(frame))
    return Dataset(frame)


def read_dataset(path: str | Path, with_target: bool = True) -> Dataset:
    with open(path, "rb") as f:
        dataset = parse_csv(f, with_target=with_target)
    logger.info("Loaded {} rows from {}", dataset.n_rows, path)
    return dataset


def to_csv(d: Dataset) -> bytes:
    """Serialize back to the canonical CSV (LF line endings)."""
    frame = d.frame.astype({c: str for c in d.frame.select_dtypes("category").columns})
    return frame.to_csv(index=False, lineterminator="\n").encode("utf-8")


def schema_report(d: Dataset) -> SchemaReport:
    columns = []
    for name in d.columns:
        s = d.frame[name]
        is_category = isinstance(s.dtype, pd.CategoricalDtype)
        columns.append(ColumnReport(
            name=name,
            dtype="category" if is_category else str(s.dtype),
            non_null=int(s.notna().sum()),
            distinct=int(s.nunique()) if is_category else None,
        ))
    return SchemaReport(n_rows=d.n_rows, columns=columns)
