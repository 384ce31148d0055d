"""Sub-commands of the fuzzop CLI.

Each module here that defines `register(app)` becomes a command named after the
module, with `_` replaced by `-`.
"""

import logging
import pkgutil
from importlib import import_module
from typing import Callable

import typer

logger = logging.getLogger(__name__)

Register = Callable[[typer.Typer], None]


def get_commands() -> dict[str, Register]:
    """
    Discover the command modules of this package.

    Private modules (leading underscore) are skipped. The result is ordered by
    command name so `fuzzop --help` lists commands in a stable order.

    Returns:
        A dictionary mapping command names to their register functions.
    """
    commands: dict[str, Register] = {}

    for info in sorted(pkgutil.iter_modules(__path__), key=lambda m: m.name):
        if info.name.startswith("_"):
            continue
        module = import_module(f"{__name__}.{info.name}")
        register = getattr(module, "register", None)
        if register is None:
            logger.debug("skipping %s: no register()", info.name)
            continue
        commands[info.name.replace("_", "-")] = register

    return commands
