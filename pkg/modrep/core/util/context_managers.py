from __future__ import annotations

import contextlib
from typing import TYPE_CHECKING

from modrep.core import errors
from modrep.core.logger import logger
from modrep.core.settings import Settings

if TYPE_CHECKING:
    from collections.abc import Iterator


@contextlib.contextmanager
def filesystem_guard(msg: str) -> Iterator[None]:
    try:
        yield
    except IOError as err:
        logger.error(f"{msg}: {err.errno} - {err.strerror}")
        raise


@contextlib.contextmanager
def invariant_guard(context: str) -> Iterator[None]:
    try:
        yield
    except errors.ModRepInvariantError:
        if Settings.strict_checks is True:
            logger.error(f"Invariant failure! {context}")  # don't duplicate tracebacks
            raise
        logger.exception(f"Invariant failure! {context}")
