from __future__ import annotations

import math
from typing import Literal

import pydantic

TYPES_MODULE_KIND = Literal["weyl", "irreducible"]
TYPES_BB1_CASE = Literal["A", "B", "impossible"]


class DigitVector(pydantic.BaseModel):
    """Base-p digits of a non-negative integer, least significant first."""

    p: int
    digits: tuple[int, ...]

    model_config = pydantic.ConfigDict(frozen=True)

    @pydantic.model_validator(mode="after")
    def check_digits(self) -> DigitVector:
        if any(not 0 <= digit < self.p for digit in self.digits):
            raise ValueError(f"digits {self.digits} out of range for p = {self.p}")
        if self.digits and self.digits[-1] == 0:
            raise ValueError(f"digits {self.digits} have trailing zeros")
        return self

    @property
    def value(self) -> int:
        return sum(digit * self.p**i for i, digit in enumerate(self.digits))

    def digit(self, i: int) -> int:
        return self.digits[i] if i < len(self.digits) else 0


class CompositionData(pydantic.BaseModel):
    """Composition factors of M / M_0 for an SL_2-module M with maximal trivial submodule M_0."""

    p: int
    factor_weights: tuple[int, ...]
    trivial_dim: int = pydantic.Field(default=0, ge=0)

    model_config = pydantic.ConfigDict(frozen=True)

    @pydantic.field_validator("factor_weights")
    @classmethod
    def descending(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(weight < 0 for weight in value):
            raise ValueError(f"factor weights must be non-negative, got {value}")
        return tuple(sorted(value, reverse=True))

    @property
    def factor_dims(self) -> tuple[int, ...]:
        """dim L(a) = product of (a_i + 1) over the base-p digits a_i of a."""
        dims = []
        for weight in self.factor_weights:
            digits = []
            while weight:
                weight, digit = divmod(weight, self.p)
                digits.append(digit + 1)
            dims.append(math.prod(digits))
        return tuple(dims)


class ShapeCheck(pydantic.BaseModel):
    """Shape m [p] + [d] + trivial blocks of a restriction to a cyclic Sylow p-subgroup."""

    valid: bool
    free_blocks: int  # m
    residual: int  # d; 0 when there is no residual block
    single_block_ok: bool  # m <= 1, and m = 1 forces d <= 1


class Sl2Record(pydantic.BaseModel):
    p: int
    a: int
    kind: TYPES_MODULE_KIND
    dim: int
    jordan_type: str
    shape_ok: bool
    factors: tuple[int, ...]
