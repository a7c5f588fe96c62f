from __future__ import annotations

from typing import Optional

import pydantic


class LeviEntry(pydantic.BaseModel):
    weight: tuple[int, ...]  # Levi fundamental-weight coordinates, ascending ambient node order
    multiplicity: int
    orbit_size: int  # size of the Levi Weyl group orbit
    depth: int  # height of the Levi part of (lambda - mu)


class LeviLevelReport(pydantic.BaseModel):
    lie_type: str
    rank: int
    highest: tuple[int, ...]
    removed_node: int  # 0-based
    levi_nodes: tuple[int, ...]  # 0-based, ascending
    p: Optional[int] = None
    source_dim: int
    levels: list[list[LeviEntry]]
    gs_warning: bool = False  # p = 3 with a highest weight outside r * omega_1

    def level(self, d: int) -> dict[tuple[int, ...], int]:
        return {entry.weight: entry.multiplicity for entry in self.levels[d]} if d < len(self.levels) else {}

    @property
    def total_dim(self) -> int:
        return sum(entry.multiplicity * entry.orbit_size for level in self.levels for entry in level)


class CandidateFactor(pydantic.BaseModel):
    weight: tuple[int, ...]
    raw_multiplicity: int
    count: int  # factors this weight heads after removing the characters of higher heads
    levi_dim: int  # dimension of the Levi irreducible module it heads
    multiple: bool  # heads at least two factors
    characteristic_zero: bool  # Levi character taken in characteristic 0
