"""Column contract of the medical-cost dataset."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

ColumnKind = Literal["integer", "count", "real", "category"]


@dataclass(frozen=True)
class ColumnSpec:
    name: str
    kind: ColumnKind
    levels: tuple[str, ...] = ()
    min_value: Optional[float] = None
    strictly_positive: bool = False

    @property
    def is_numeric(self) -> bool:
        return self.kind != "category"

    @property
    def is_groupable(self) -> bool:
        # children is a small integer count and is boxed like a category
        return self.kind in ("category", "count")


# Levels are listed alphabetically; their position is the label encoding.
SEX_LEVELS = ("female", "male")
SMOKER_LEVELS = ("no", "yes")
REGION_LEVELS = ("northeast", "northwest", "southeast", "southwest")

SCHEMA: tuple[ColumnSpec, ...] = (
    ColumnSpec("age", "integer", min_value=0),
    ColumnSpec("sex", "category", levels=SEX_LEVELS),
    ColumnSpec("bmi", "real", strictly_positive=True),
    ColumnSpec("children", "count", min_value=0),
    ColumnSpec("smoker", "category", levels=SMOKER_LEVELS),
    ColumnSpec("region", "category", levels=REGION_LEVELS),
    ColumnSpec("charges", "real", min_value=0),
)

TARGET = "charges"
COLUMNS: tuple[str, ...] = tuple(c.name for c in SCHEMA)
FEATURE_COLUMNS: tuple[str, ...] = tuple(c for c in COLUMNS if c != TARGET)
CATEGORY_COLUMNS: tuple[str, ...] = tuple(c.name for c in SCHEMA if c.kind == "category")
NUMERIC_COLUMNS: tuple[str, ...] = tuple(c.name for c in SCHEMA if c.is_numeric)

_BY_NAME = {c.name: c for c in SCHEMA}


def column_spec(name: str) -> Optional[ColumnSpec]:
    return _BY_NAME.get(name)


def encoding_table() -> dict[str, dict[str, int]]:
    """Category value → integer code, per categorical column."""
    return {
        c.name: {level: code for code, level in enumerate(c.levels)}
        for c in SCHEMA
        if c.kind == "category"
    }
