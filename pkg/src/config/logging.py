"""loguru sink configuration."""

from __future__ import annotations

import sys

from loguru import logger

from src.config.models import LoggingSettings

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function} - {message}"


def setup_logging(settings: LoggingSettings, level: str | None = None) -> None:
    """Replace loguru's default sink with stderr and, if configured, a rotating file."""
    logger.remove()
    logger.add(sys.stderr, level=level or settings.level, format=LOG_FORMAT)
    if settings.log_file:
        logger.add(
            settings.log_file,
            level=level or settings.level,
            format=LOG_FORMAT,
            rotation=settings.rotation,
            retention=settings.retention,
        )
