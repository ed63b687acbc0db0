"""Logging setup for command-line use."""

import logging
import sys

from wipac_dev_tools import logging_tools

from .config import LOG_FORMAT

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def configure_logging(level: str = "WARNING") -> None:
    """Send all logging to stderr so stdout stays pipeline-safe."""
    level = level.upper()
    if level not in LOG_LEVELS:
        raise ValueError(f"Invalid log level: {level}")
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT)
    logging_tools.set_level(
        level,  # type: ignore[arg-type]
        first_party_loggers="peal_hcp",
        third_party_level="WARNING",
    )
