"""Plain-text rendering through Jinja2 templates."""

from __future__ import annotations

from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from src.utils.formatters import format_currency, format_number, format_score

TEMPLATES_DIR = Path(__file__).resolve().parent / "templates"

_env = Environment(
    loader=FileSystemLoader(str(TEMPLATES_DIR)),
    autoescape=False,
    keep_trailing_newline=True,
    trim_blocks=True,
    lstrip_blocks=True,
    undefined=StrictUndefined,
)
_env.filters.update(
    score=format_score,
    number=format_number,
    currency=format_currency,
)


def render_text(template_name: str, context: dict[str, Any]) -> str:
    """Render a text report from a Jinja2 template."""
    template = _env.get_template(template_name)
    return template.render(**context)
