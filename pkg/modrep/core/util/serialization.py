"""Text forms of modules and record streams."""

from __future__ import annotations

from pathlib import Path
from typing import Any, TYPE_CHECKING, Union

import pydantic_core

from modrep.core.logger import logger
from modrep.core.modular import ModularModule
from modrep.core.schemas.records import ModuleHeader
from modrep.core.schemas.records import RecordHeader
from modrep.core.settings import Settings
from modrep.core.util import context_managers

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

    import numpy as np
    import pydantic

    from modrep.core.schemas.records import TYPES_COMMAND
    from modrep.core.weyl_module import IntegralRep
    from modrep.core.weyl_module import OperatorKey

RECORDS_MAGIC = "# modrep-records"


def _coords(values: Iterable[int]) -> str:
    return ",".join(str(int(x)) for x in values)


def module_header(module: Union[ModularModule, IntegralRep]) -> ModuleHeader:
    datum = module.datum
    return ModuleHeader(
        lie_type=datum.lie_type,
        rank=datum.rank,
        highest=module.highest,
        p=module.p if isinstance(module, ModularModule) else None,
        dim=module.dim,
    )


def _operators(module: Union[ModularModule, IntegralRep]) -> Iterator[tuple[OperatorKey, np.ndarray]]:
    if isinstance(module, ModularModule):
        for key in sorted(module.ops):
            yield key, module.ops[key]
    else:
        for key in sorted(module.ops):
            yield key, module.dense(key)


def module_table(module: Union[ModularModule, IntegralRep]) -> str:
    """Header line, one line per basis weight, then a sparse (row, col, value) section per operator."""
    lines = [str(module_header(module))]
    lines.extend(_coords(weight) for weight in module.basis_weights)
    for (root, k), matrix in _operators(module):
        rows, cols = matrix.nonzero()
        lines.append(f"op {_coords(root)} {k} {len(rows)}")
        lines.extend(f"{row} {col} {int(matrix[row, col])}" for row, col in zip(rows, cols))
    return "\n".join(lines) + "\n"


def dump_module(module: Union[ModularModule, IntegralRep], path: Path) -> Path:
    with context_managers.filesystem_guard(f"Unable to write module dump to {path}"):
        path.write_text(module_table(module), encoding="utf-8")
    logger.info(f"Module {module_header(module)} written to {path}")
    return path


def read_module_table(text: str) -> tuple[ModuleHeader, list[tuple[int, ...]], dict[OperatorKey, list[tuple[int, int, int]]]]:
    """Parse the output of `module_table`; matrices are returned as sparse triples."""
    lines = text.splitlines()
    header = ModuleHeader.parse(lines[0])
    weights = [tuple(int(x) for x in line.split(",") if x) for line in lines[1 : header.dim + 1]]
    operators: dict[OperatorKey, list[tuple[int, int, int]]] = {}
    position = header.dim + 1
    while position < len(lines):
        _, root, k, count = lines[position].split()
        entries = [tuple(int(x) for x in line.split()) for line in lines[position + 1 : position + 1 + int(count)]]
        operators[tuple(int(x) for x in root.split(",")), int(k)] = entries  # type: ignore[assignment]
        position += int(count) + 1
    return header, weights, operators


def records_stream(command: TYPES_COMMAND, records: Iterable[pydantic.BaseModel]) -> str:
    header = RecordHeader(schema_version=Settings.records_schema_version, command=command)
    return "\n".join([str(header), *(record.model_dump_json() for record in records)]) + "\n"


def read_records(text: str) -> tuple[int, list[dict[str, Any]]]:
    """Schema version and decoded records of a record stream."""
    first, *rest = text.splitlines()
    if not first.startswith(RECORDS_MAGIC):
        raise ValueError(f"not a record stream: {first!r}")
    version = int(first.split("schema=")[1].split()[0])
    return version, [pydantic_core.from_json(line) for line in rest if line.strip()]
