from __future__ import annotations

from pathlib import Path
from typing import Literal, Optional

import pydantic

from modrep.core import errors
from modrep.core.root_system import cartan_matrix
from modrep.core.schemas.unipotent import TYPES_CLASS_LABEL
from modrep.core.util.type_coercion import is_prime

TYPES_COMMAND = Literal["roots", "char", "dim", "module", "jordan", "tensor", "sl2scan", "levels", "bound", "verify"]
TYPES_FORMAT = Literal["text", "records"]
TYPES_LEVEL_SOURCE = Literal["weyl", "head"]


class RunConfig(pydantic.BaseModel):
    """A parsed command line. Node indices are 1-based (Bourbaki) here."""

    command: TYPES_COMMAND
    lie_type: Optional[str] = None
    rank: Optional[int] = None
    weight: Optional[tuple[int, ...]] = None
    p: Optional[int] = None
    primes: tuple[int, ...] = ()
    label: Optional[TYPES_CLASS_LABEL] = None
    m: Optional[int] = pydantic.Field(default=None, ge=1)
    n: Optional[int] = pydantic.Field(default=None, ge=1)
    k: Optional[int] = pydantic.Field(default=None, ge=0)
    order: Optional[int] = pydantic.Field(default=None, ge=2)
    l: Optional[int] = pydantic.Field(default=None, ge=1)  # noqa: E741  # rank, for dimension bounds
    f4_p2_flag: bool = False
    node: Optional[int] = None
    level: Optional[int] = pydantic.Field(default=None, ge=0)
    source: TYPES_LEVEL_SOURCE = "weyl"
    reverse_labels: bool = False
    bound: Optional[int] = pydantic.Field(default=None, ge=1)
    checks: tuple[int, ...] = ()
    dump: Optional[Path] = None
    output_format: TYPES_FORMAT = "text"
    size_cap: Optional[int] = pydantic.Field(default=None, ge=1)
    debug: bool = False

    model_config = pydantic.ConfigDict(frozen=True)

    @pydantic.field_validator("p")
    @classmethod
    def prime(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and not is_prime(value):
            raise ValueError(f"{value} is not prime")
        return value

    @pydantic.field_validator("primes")
    @classmethod
    def all_prime(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        for p in value:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        return value

    @pydantic.field_validator("checks")
    @classmethod
    def known_checks(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(not 1 <= number <= 10 for number in value):
            raise ValueError(f"acceptance checks are numbered 1 to 10, got {value}")
        return value

    @pydantic.model_validator(mode="after")
    def consistent_with_type(self) -> RunConfig:
        if self.lie_type is None:
            return self
        try:
            cartan_matrix(self.lie_type, self.rank or 0)
        except errors.ModRepPreconditionError as err:
            raise ValueError(str(err)) from None
        if self.weight is not None:
            if len(self.weight) != self.rank:
                raise ValueError(f"weight {self.weight} needs {self.rank} coordinates for {self.lie_type}{self.rank}")
            if any(x < 0 for x in self.weight):
                raise ValueError(f"weight {self.weight} is not dominant")
        if self.node is not None and not 1 <= self.node <= (self.rank or 0):
            raise ValueError(f"node {self.node} out of range 1..{self.rank}")
        return self


class RecordHeader(pydantic.BaseModel):
    schema_version: int
    command: TYPES_COMMAND

    def __str__(self) -> str:
        return f"# modrep-records schema={self.schema_version} command={self.command}"


class CheckResult(pydantic.BaseModel):
    number: int
    name: str
    passed: bool
    checked: int = 0  # grid points examined
    skipped: int = 0  # grid points outside the size cap or the hypothesis
    detail: str = ""  # first counterexample when failing


class ModuleHeader(pydantic.BaseModel):
    lie_type: str
    rank: int
    highest: tuple[int, ...]
    p: Optional[int] = None  # None for the integral form
    dim: int

    def __str__(self) -> str:
        field = "integral" if self.p is None else str(self.p)
        return f"{self.lie_type} {self.rank} {','.join(map(str, self.highest))} {field} {self.dim}"

    @classmethod
    def parse(cls, line: str) -> ModuleHeader:
        lie_type, rank, highest, field, dim = line.split()
        return cls(
            lie_type=lie_type,
            rank=int(rank),
            highest=tuple(int(x) for x in highest.split(",") if x),
            p=None if field == "integral" else int(field),
            dim=int(dim),
        )


class ValueRecord(pydantic.BaseModel):
    """A single computed value, e.g. a dimension or a Jordan type."""

    command: TYPES_COMMAND
    inputs: dict[str, str]
    value: str


class RootSystemRecord(pydantic.BaseModel):
    lie_type: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    root_lengths: tuple[str, ...]
    weyl_order: int


class WeightRecord(pydantic.BaseModel):
    weight: tuple[int, ...]
    multiplicity: int
    orbit_size: int


class ModuleReport(pydantic.BaseModel):
    header: ModuleHeader
    weyl_dim: int
    radical: dict[str, int]  # weight (comma separated) -> radical dimension
    character: list[WeightRecord]
