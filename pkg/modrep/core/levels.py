"""Levi level decompositions: grading a character by the coefficient of a removed simple root.

Node indices are 0-based here; node i is the Bourbaki node i + 1.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Optional, TYPE_CHECKING

from modrep.core import errors
from modrep.core.characters import freudenthal_multiplicities
from modrep.core.logger import logger
from modrep.core.root_system import build_root_system
from modrep.core.root_system import levi_datum
from modrep.core.root_system import weight_stabilizer_order
from modrep.core.schemas.levels import CandidateFactor
from modrep.core.schemas.levels import LeviEntry
from modrep.core.schemas.levels import LeviLevelReport
from modrep.core.sl2 import irreducible_character
from modrep.core.util.context_managers import invariant_guard

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from modrep.core.characters import WeightMultTable
    from modrep.core.root_system import RootDatum
    from modrep.core.root_system import Weight


def smith_top_factor(datum: RootDatum, highest: Sequence[int], levi_nodes: Iterable[int]) -> Weight:
    """Restriction of the highest weight to the Levi torus, ascending node order."""
    return tuple(int(highest[j]) for j in sorted(set(levi_nodes)) if 0 <= j < datum.rank)


def reverse_levi_labels(weight: Sequence[int]) -> Weight:
    """Relabel Levi coordinates in the reversed node order."""
    return tuple(reversed(tuple(weight)))


def level_decomposition(source: WeightMultTable, removed_node: int, *, p: Optional[int] = None) -> LeviLevelReport:
    """Split a character into levels d (the alpha_removed coefficient of lambda - mu), each
    reported by its Levi-dominant weights.

    Args:
        source: Character of a highest weight module
        removed_node: 0-based index of the simple root whose coefficient gives the level
        p: Characteristic the character belongs to, recorded on the report

    Raises:
        ModRepInvariantError: lambda - mu is not a non-negative integral root combination

    """
    datum, highest = source.datum, source.highest
    if not 0 <= removed_node < datum.rank:
        raise errors.ModRepPreconditionError(f"Node {removed_node} out of range for {datum.label}")
    levi_nodes = tuple(j for j in range(datum.rank) if j != removed_node)
    levi = levi_datum(datum, levi_nodes)

    census: dict[int, dict[Weight, tuple[int, int]]] = defaultdict(dict)
    for weight, mult in source.weights().items():
        difference = datum.weight_to_root([h - w for h, w in zip(highest, weight)])
        if any(c.denominator != 1 or c < 0 for c in difference):
            raise errors.ModRepInvariantError(f"Weight {weight} does not lie below {highest} in the root lattice")
        if all(weight[j] >= 0 for j in levi_nodes):
            levi_weight = tuple(weight[j] for j in levi_nodes)
            depth = int(sum(difference[j] for j in levi_nodes))
            census[int(difference[removed_node])][levi_weight] = (mult, depth)

    levels = []
    for d in range(max(census) + 1 if census else 0):
        entries = [
            LeviEntry(
                weight=levi_weight,
                multiplicity=mult,
                orbit_size=levi.weyl_order // weight_stabilizer_order(levi, levi_weight),
                depth=depth,
            )
            for levi_weight, (mult, depth) in census[d].items()
        ]
        levels.append(sorted(entries, key=lambda entry: (entry.depth, tuple(-x for x in entry.weight))))

    report = LeviLevelReport(
        lie_type=datum.lie_type,
        rank=datum.rank,
        highest=highest,
        removed_node=removed_node,
        levi_nodes=levi_nodes,
        p=p,
        source_dim=source.dim,
        levels=levels,
        gs_warning=p == 3 and any(highest[1:]),
    )
    with invariant_guard(f"level decomposition of {highest} for {datum.label}"):
        if report.total_dim != report.source_dim:
            raise errors.ModRepInvariantError(f"Levels account for {report.total_dim} of {report.source_dim} dimensions")
        top = smith_top_factor(datum, highest, levi_nodes)
        if not levels or report.level(0).get(top) != 1:
            raise errors.ModRepInvariantError(f"Level 0 does not start with the top factor {top}")
    if report.gs_warning:
        logger.info(f"Level decomposition of {highest} at p = 3 is outside the r * omega_1 case; reported for reference only")
    return report


def _levi_character(levi: RootDatum, weight: Weight, p: Optional[int]) -> tuple[dict[Weight, int], int, bool]:
    """Dominant part, dimension and characteristic-0 flag of the Levi irreducible character."""
    if p is not None and levi.rank == 1:
        full = irreducible_character(weight[0], p)
        return {(w,): m for w, m in full.items() if w >= 0}, sum(full.values()), False
    table = freudenthal_multiplicities(levi, weight)
    return dict(table.entries), table.dim, True


def candidate_factor_report(report: LeviLevelReport, d: int, p: Optional[int] = None) -> list[CandidateFactor]:
    """Levi-dominant weights that can head composition factors at level d.

    The level census is peeled from the top: each remaining highest weight
    heads as many factors as its remaining multiplicity, and their Levi
    characters are removed. Levi characters are modular (Steinberg) for
    rank-one Levis when p is given, characteristic 0 otherwise.
    """
    if not 0 <= d < len(report.levels):
        raise errors.ModRepPreconditionError(f"Level {d} out of range 0..{len(report.levels) - 1}")
    p = p if p is not None else report.p
    datum = build_root_system(report.lie_type, report.rank)  # type: ignore[arg-type]
    levi = levi_datum(datum, report.levi_nodes)
    entries = {entry.weight: entry for entry in report.levels[d]}
    remaining = {weight: entry.multiplicity for weight, entry in entries.items()}
    candidates = []
    while remaining:
        top = min(remaining, key=lambda weight: (entries[weight].depth, tuple(-x for x in weight)))
        count = remaining.pop(top)
        character, dimension, char0 = _levi_character(levi, top, p)
        for weight, mult in character.items():
            if weight == top or weight not in remaining:
                continue
            remaining[weight] -= count * mult
            if remaining[weight] <= 0:
                if remaining[weight] < 0:
                    logger.info(f"Level {d} census is not a sum of Levi characters below {top}; clamping {weight}")
                del remaining[weight]
        candidates.append(
            CandidateFactor(
                weight=top,
                raw_multiplicity=entries[top].multiplicity,
                count=count,
                levi_dim=dimension,
                multiple=count >= 2,
                characteristic_zero=char0,
            )
        )
    return candidates
