"""Logging setup for the regulus package"""

import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

LOGGER_NAME = "regulus"


def configure_logging(level: str = "WARNING", console: Optional[Console] = None) -> logging.Logger:
    """
    Attach a rich handler to the package logger

    Args:
        level: Logging level name (DEBUG, INFO, WARNING, ...)
        console: Console to log to (default: stderr)

    Returns:
        The configured package logger
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level.upper())

    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)

    handler = RichHandler(
        console=console or Console(stderr=True),
        show_path=False,
        rich_tracebacks=True,
    )
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
    return logger
