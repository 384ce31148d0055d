"""Logging setup shared by the CLI."""

import logging

from rich.console import Console
from rich.logging import RichHandler

LOGGER_NAME = "fuzzop_cli"


def configure_logging(verbose: bool = False) -> logging.Logger:
    """
    Attach a rich handler writing to stderr to the package logger.

    Args:
        verbose: If True, log at DEBUG level; otherwise only warnings.

    Returns:
        logging.Logger: The package logger.
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)

    # Re-running the callback (e.g. in tests) must not stack handlers
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)

    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=verbose,
    )
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
    return logger
