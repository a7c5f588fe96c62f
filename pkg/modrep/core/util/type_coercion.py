from __future__ import annotations

import re
from typing import Any, Optional

_LIE_TYPE = re.compile(r"^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$")


def maybe_int(value: Any) -> Optional[int]:
    """Casts value to int or None."""
    try:
        return int(value)
    except (TypeError, ValueError):
        return None


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parse comma separated integers, e.g. "1,0,0,1"."""
    if not text.strip():
        return ()
    values = tuple(maybe_int(part) for part in text.split(","))
    if None in values:
        raise ValueError(f"not a comma separated list of integers: {text!r}")
    return values  # type: ignore[return-value]


def parse_lie_type(text: str) -> tuple[str, int]:
    """Split a Cartan type label, e.g. "F4" -> ("F", 4)."""
    match = _LIE_TYPE.match(text)
    if match is None:
        raise ValueError(f"not a Cartan type label: {text!r}")
    return match.group(1).upper(), int(match.group(2))


def is_prime(value: int) -> bool:
    if value < 2:
        return False
    divisor = 2
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 1
    return True
