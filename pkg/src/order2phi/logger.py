import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from order2phi import config

ROOT = "order2phi"


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """Attach a RichHandler on stderr to the package logger.

    stdout carries JSON only, so nothing is ever logged there. Calling this again
    replaces the level without stacking handlers.
    """
    logger = logging.getLogger(ROOT)
    logger.setLevel((level or config.LOG_LEVEL).upper())
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
    return logger
