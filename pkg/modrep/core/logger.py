from __future__ import annotations

import logging
from typing import Optional, TYPE_CHECKING

from modrep.core.settings import Settings

if TYPE_CHECKING:
    from pathlib import Path

logger = logging.getLogger("modrep")

_FORMAT = "{asctime}.{msecs:03.0f} ({levelname}): {message}"
_handlers: dict[Optional[Path], logging.Handler] = {}  # one handler per destination, None for stderr


def enable_debug_logging(*, log_file: Optional[Path] = None) -> None:
    """Log at `Settings.log_level` to stderr, and to `log_file` (as .log) when given.

    Repeated calls reuse the handlers already attached.
    """
    import sys  # Disable check; only want to import sys if needed. pylint: disable=import-outside-toplevel

    logger.setLevel(Settings.log_level)
    formatter = logging.Formatter(fmt=_FORMAT, datefmt="%Y-%m-%d %H:%M:%S", style="{")

    destinations: dict[Optional[Path], logging.Handler] = {}
    if None not in _handlers:
        destinations[None] = logging.StreamHandler(stream=sys.stderr)  # stdout carries reports
    if log_file is not None and log_file.with_suffix(".log") not in _handlers:
        destinations[log_file.with_suffix(".log")] = logging.FileHandler(log_file.with_suffix(".log"), encoding="utf-8")

    for destination, handler in destinations.items():
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        _handlers[destination] = handler


if Settings.debug:
    enable_debug_logging(log_file=Settings.log_file)
