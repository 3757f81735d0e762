"""YAML configuration loading with Pydantic validation.

Pipeline settings are layered, lowest to highest precedence:
packaged ``config/pipeline.yaml`` → user config file → ``REGRESS_BENCH_SEED``
→ explicit overrides (command-line flags).
"""

from __future__ import annotations

import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Mapping, Optional

import yaml
from pydantic import ValidationError

from src.config.models import PipelineConfig, Settings
from src.errors import UsageError
from src.utils.io import atomic_write_text

CONFIG_DIR = Path(__file__).resolve().parent.parent.parent / "config"
SEED_ENV_VAR = "REGRESS_BENCH_SEED"


def _load_yaml(path: Path) -> dict:
    with open(path) as f:
        payload = yaml.safe_load(f)
    if payload is None:
        return {}
    if not isinstance(payload, dict):
        raise UsageError(f"{path} must hold a mapping of keys to values")
    return payload


@lru_cache(maxsize=1)
def load_settings() -> Settings:
    path = CONFIG_DIR / "settings.yaml"
    return Settings(**_load_yaml(path)) if path.exists() else Settings()


@lru_cache(maxsize=1)
def _pipeline_defaults() -> dict:
    path = CONFIG_DIR / "pipeline.yaml"
    return _load_yaml(path) if path.exists() else {}


def _env_seed(env: Mapping[str, str]) -> Optional[int]:
    raw = env.get(SEED_ENV_VAR)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None


def load_pipeline_config(
    path: str | Path | None = None,
    overrides: Optional[Mapping[str, Any]] = None,
    env: Optional[Mapping[str, str]] = None,
) -> PipelineConfig:
    """Build the effective PipelineConfig. ``None`` override values are ignored."""
    values: dict[str, Any] = dict(_pipeline_defaults())
    if path is not None:
        try:
            values.update(_load_yaml(Path(path)))
        except FileNotFoundError:
            raise UsageError(f"config file not found: {path}") from None
        except yaml.YAMLError as e:
            raise UsageError(f"config file {path} is not valid YAML: {e}") from e

    seed = _env_seed(os.environ if env is None else env)
    if seed is not None:
        values["seed"] = seed

    values.update({key: value for key, value in (overrides or {}).items() if value is not None})
    try:
        return PipelineConfig(**values)
    except ValidationError as e:
        errors = "; ".join(f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors())
        raise UsageError(f"invalid configuration: {errors}") from e


def dump_pipeline_config(config: PipelineConfig) -> str:
    return yaml.safe_dump(config.model_dump(), sort_keys=False)


def save_pipeline_config(path: str | Path, config: PipelineConfig) -> Path:
    return atomic_write_text(path, dump_pipeline_config(config))
