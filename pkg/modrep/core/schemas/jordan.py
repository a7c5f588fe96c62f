from __future__ import annotations

import pydantic

from modrep.core.util.type_coercion import is_prime


class JordanType(pydantic.BaseModel):
    """Block sizes of a unipotent matrix, descending."""

    blocks: tuple[int, ...]

    model_config = pydantic.ConfigDict(frozen=True)

    @pydantic.field_validator("blocks")
    @classmethod
    def canonical_order(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(size < 1 for size in value):
            raise ValueError(f"Jordan blocks must be positive, got {value}")
        return tuple(sorted(value, reverse=True))

    @classmethod
    def parse(cls, text: str) -> JordanType:
        return cls(blocks=tuple(int(part) for part in text.split(",") if part.strip()))

    def __str__(self) -> str:
        return ",".join(str(size) for size in self.blocks)

    @property
    def total(self) -> int:
        return sum(self.blocks)

    @property
    def nontrivial(self) -> tuple[int, ...]:
        return tuple(size for size in self.blocks if size > 1)

    def rank_sequence(self) -> list[int]:
        """r_k = rank (u - 1)^k for k = 0, 1, ... down to the first zero."""
        largest = self.blocks[0] if self.blocks else 0
        return [sum(max(size - k, 0) for size in self.blocks) for k in range(largest + 1)]


class BoundInputs(pydantic.BaseModel):
    p: int
    k: int = pydantic.Field(ge=0)  # |u^(p^k)| = p
    l: int = pydantic.Field(ge=1)  # noqa: E741  # rank
    f4_p2_flag: bool = False

    @pydantic.field_validator("p")
    @classmethod
    def prime(cls, value: int) -> int:
        if not is_prime(value):
            raise ValueError(f"{value} is not prime")
        return value
