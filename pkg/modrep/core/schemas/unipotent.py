from __future__ import annotations

from typing import Literal, Optional

import pydantic

TYPES_CLASS_LABEL = Literal["regular", "G2a1", "A1_3", "custom"]


class UnipotentRepresentative(pydantic.BaseModel):
    """A product of root elements x_beta(t), evaluated left to right."""

    label: TYPES_CLASS_LABEL
    word: tuple[tuple[tuple[int, ...], int], ...]  # ((root in simple-root coordinates, scalar), ...)
    p: int

    model_config = pydantic.ConfigDict(frozen=True)


class Verdict(pydantic.BaseModel):
    p: int
    highest: tuple[int, ...]
    dim: int
    label: TYPES_CLASS_LABEL
    jordan_type: Optional[str] = None
    single_block: Optional[bool] = None
    order: Optional[int] = None
    prediction: Optional[bool] = None  # single non-trivial block expected: regular class and dim <= 7
    agree: Optional[bool] = None
    skipped: Optional[str] = None
