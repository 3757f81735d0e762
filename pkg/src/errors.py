"""Exception hierarchy shared by every stage of the pipeline.

Each family carries the exit code the CLI reports for it.
"""

from __future__ import annotations

from typing import Optional


class RegressBenchError(ValueError):
    exit_code: int = 3

    def __init__(self, message: str, row: Optional[int] = None) -> None:
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


# --- Usage (exit 1) ---

class UsageError(RegressBenchError):
    exit_code = 1


# --- Input / data (exit 2) ---

class InputError(RegressBenchError):
    exit_code = 2


class MissingHeader(InputError):
    pass


class RowArity(InputError):
    pass


class ParseError(InputError):
    pass


class SchemaMismatch(InputError):
    pass


class UnknownColumn(InputError):
    pass


class TypeMismatch(InputError):
    pass


class EmptyInput(InputError):
    pass


class ModelFormatError(InputError):
    pass


# --- Computation (exit 3) ---

class ComputationError(RegressBenchError):
    exit_code = 3


class DimensionMismatch(ComputationError):
    pass


class RankDeficient(ComputationError):
    pass


class BadHyperparam(ComputationError):
    pass


class BadRatio(ComputationError):
    pass


class BadK(ComputationError):
    pass


class ZeroVariance(ComputationError):
    pass


class FoldError(ComputationError):
    """A failure inside one cross-validation fold."""

    def __init__(self, fold: int, cause: Exception) -> None:
        self.fold = fold
        self.cause = cause
        super().__init__(f"fold {fold}: {cause}")
