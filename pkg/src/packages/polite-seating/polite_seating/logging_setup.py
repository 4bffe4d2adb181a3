"""
Logging configuration shared by the CLI and the scripts

Library modules only create loggers; handlers are installed here. Records
carry structured context in extra={"custom_dimensions": {...}}, which the
formatter appends as key=value pairs.
"""

import logging
import sys
from typing import TextIO, Union

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
ROOT_LOGGER = 'polite_seating'


class CustomDimensionsFormatter(logging.Formatter):
    """Formatter that renders record.custom_dimensions after the message."""

    def format(self, record: logging.LogRecord) -> str:
        message = super().format(record)
        dimensions = getattr(record, 'custom_dimensions', None)
        if dimensions:
            pairs = ' '.join(f"{key}={value}" for key, value in dimensions.items())
            message = f"{message} | {pairs}"
        return message


def configure_logging(level: Union[str, int] = 'WARNING', stream: TextIO = None) -> logging.Logger:
    """
    Install one stream handler on the package logger.

    Calling it again replaces the previous handler.

    Args:
        level: Level name or number
        stream: Target stream (defaults to standard error)

    Returns:
        The package logger
    """
    if isinstance(level, str):
        numeric = logging.getLevelName(level.upper())
        if not isinstance(numeric, int):
            raise ValueError(f"unknown log level {level!r}")
        level = numeric

    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(CustomDimensionsFormatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger
