"""
Logging utility for paramp
"""

import logging
import sys
from pathlib import Path
from typing import Optional

from pythonjsonlogger import jsonlogger

from ..models.errors import ConfigError


def setup_logging(log_level: str = "INFO", log_file: Optional[str] = "logs/paramp.log") -> logging.Logger:
    """Set up the paramp logger: plain text on stderr, JSON lines in log_file"""
    level = getattr(logging, str(log_level).upper(), None)
    if not isinstance(level, int):
        raise ConfigError(f"unknown log level {log_level!r}")

    logger = logging.getLogger("paramp")
    logger.setLevel(level)

    # Remove existing handlers
    for handler in list(logger.handlers):
        handler.close()
        logger.removeHandler(handler)

    # stdout carries JSON and CSV payloads
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    ))
    logger.addHandler(console_handler)

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_path)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(jsonlogger.JsonFormatter(
            '%(asctime)s %(levelname)s %(name)s %(message)s',
            rename_fields={'asctime': '@timestamp', 'levelname': 'severity'}
        ))
        logger.addHandler(file_handler)

    return logger
