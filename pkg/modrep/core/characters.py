"""Characteristic-0 characters: Freudenthal multiplicities and Weyl dimensions."""

from __future__ import annotations

import heapq
from typing import Optional, TYPE_CHECKING

from modrep.core import errors
from modrep.core.logger import logger
from modrep.core.root_system import dominant_representative
from modrep.core.root_system import fundamental_weights
from modrep.core.root_system import orbit_size
from modrep.core.root_system import weight_grid
from modrep.core.root_system import weyl_orbit
from modrep.core.util.cache_hooks import cache_result

if TYPE_CHECKING:
    from collections.abc import Iterator, Mapping, Sequence

    from modrep.core.root_system import RootDatum
    from modrep.core.root_system import Weight


class WeightMultTable:
    """A W-invariant character, stored by its dominant weights.

    Multiplicities of non-dominant weights are resolved through their
    dominant representative.
    """

    def __init__(self, datum: RootDatum, highest: Sequence[int], entries: Mapping[Weight, int]):
        self.datum = datum
        self.highest: Weight = tuple(highest)
        self.entries: dict[Weight, int] = {weight: mult for weight, mult in entries.items() if mult > 0}
        if any(not datum.is_dominant(weight) for weight in self.entries):
            raise errors.ModRepInvariantError(f"Character table for {datum.label} holds non-dominant weights")

    def __repr__(self) -> str:
        return f"WeightMultTable({self.datum.label}, highest={self.highest}, dim={self.dim})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightMultTable):
            return NotImplemented
        return self.datum == other.datum and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.datum, frozenset(self.entries.items())))

    def mult(self, weight: Sequence[int]) -> int:
        return self.entries.get(dominant_representative(self.datum, weight), 0)

    def dominant_items(self) -> list[tuple[Weight, int]]:
        """Dominant entries, highest first (by depth below the highest weight)."""
        return sorted(self.entries.items(), key=lambda item: (_depth(self.datum, self.highest, item[0]), tuple(-x for x in item[0])))

    @property
    def dim(self) -> int:
        return sum(mult * orbit_size(self.datum, weight) for weight, mult in self.entries.items())

    def weights(self) -> dict[Weight, int]:
        """The full character: every weight with its multiplicity."""
        full: dict[Weight, int] = {}
        for weight, mult in self.entries.items():
            for image in weyl_orbit(self.datum, weight):
                full[image] = mult
        return full

    def nonzero_multiplicity_free(self) -> bool:
        return all(mult == 1 for weight, mult in self.entries.items() if any(weight))


def _depth(datum: RootDatum, highest: Sequence[int], weight: Sequence[int]) -> int:
    """Height of highest - weight in the root lattice."""
    difference = datum.weight_to_root([h - w for h, w in zip(highest, weight)])
    if any(c.denominator != 1 for c in difference):
        raise errors.ModRepPreconditionError(f"Weight {tuple(weight)} is not in the root lattice coset of {tuple(highest)}")
    return int(sum(difference))


def _check_dominant(datum: RootDatum, weight: Sequence[int]) -> Weight:
    weight = tuple(int(x) for x in weight)
    if len(weight) != datum.rank:
        raise errors.ModRepPreconditionError(f"Weight {weight} has {len(weight)} coordinates, {datum.label} has rank {datum.rank}")
    if not datum.is_dominant(weight):
        raise errors.ModRepPreconditionError(f"Weight {weight} is not dominant")
    return weight


def _freudenthal(datum: RootDatum, highest: Weight) -> Iterator[tuple[Weight, int]]:
    """Yield (dominant weight, multiplicity) in order of depth below `highest`.

    Dominant weights are generated lazily by subtracting positive roots while
    staying dominant; every dominant weight below `highest` is reached this way.
    """
    positive = [(root, datum.root_to_weight(root), sum(root)) for root in datum.positive_roots]
    double_rho = tuple(2 * x for x in datum.rho)
    table: dict[Weight, int] = {}
    heap = [(0, tuple(-x for x in highest), highest)]
    queued = {highest}
    while heap:
        depth, _, weight = heapq.heappop(heap)
        if weight == highest:
            mult = 1
        else:
            difference = datum.weight_to_root([h - w for h, w in zip(highest, weight)])
            shifted = [h + w + r for h, w, r in zip(highest, weight, double_rho)]
            coefficient = sum(int(n) * d * x for n, d, x in zip(difference, datum.symmetrizer, shifted))
            total = 0
            for root, root_weight, _ in positive:
                k = 1
                while True:
                    image = tuple(w + k * r for w, r in zip(weight, root_weight))
                    image_mult = table.get(dominant_representative(datum, image), 0)
                    if image_mult == 0:
                        break
                    total += datum.root_pairing(image, root) * image_mult
                    k += 1
            if coefficient <= 0 or (2 * total) % coefficient != 0:
                raise errors.ModRepInvariantError(f"Freudenthal recursion broke down at {weight} below {highest}")
            mult = 2 * total // coefficient
        table[weight] = mult
        yield weight, mult
        for _, root_weight, height in positive:
            lower = tuple(w - r for w, r in zip(weight, root_weight))
            if lower not in queued and datum.is_dominant(lower):
                queued.add(lower)
                heapq.heappush(heap, (depth + height, tuple(-x for x in lower), lower))


@cache_result(key="freudenthal")
def freudenthal_multiplicities(datum: RootDatum, highest: Weight) -> WeightMultTable:
    """Character of the Weyl module V(highest) by Freudenthal's recursion."""
    highest = _check_dominant(datum, highest)
    table = WeightMultTable(datum, highest, dict(_freudenthal(datum, highest)))
    logger.debug(f"Freudenthal {datum.label} {highest}: {len(table.entries)} dominant weights")
    return table


def weyl_dimension(datum: RootDatum, highest: Sequence[int]) -> int:
    """Weyl's dimension formula: the product of (lambda + rho, alpha) / (rho, alpha) over positive roots."""
    highest = _check_dominant(datum, highest)
    shifted = tuple(x + r for x, r in zip(highest, datum.rho))
    numerator = denominator = 1
    for root in datum.positive_roots:
        numerator *= datum.root_pairing(shifted, root)
        denominator *= datum.root_pairing(datum.rho, root)
    if numerator % denominator != 0:
        raise errors.ModRepInvariantError(f"Weyl dimension of {highest} is not an integer")
    return numerator // denominator


def is_nonzero_multiplicity_free(datum: RootDatum, highest: Sequence[int]) -> bool:
    """Whether every non-zero weight of V(highest) has multiplicity 1; stops at the first repeat."""
    highest = _check_dominant(datum, highest)
    for weight, mult in _freudenthal(datum, highest):
        if mult > 1 and any(weight):
            logger.debug(f"{datum.label} {highest}: weight {weight} has multiplicity {mult}")
            return False
    return True


def scan_multiplicity_free(
    datum: RootDatum, coefficient_bound: int, *, fundamentals_only: bool = False
) -> list[tuple[Weight, int]]:
    """Non-zero dominant weights with all coefficients at most the bound whose
    non-zero weights all have multiplicity 1, with their Weyl dimensions.

    Args:
        datum: Root datum to scan
        coefficient_bound: Largest coefficient a_i of lambda = sum a_i omega_i
        fundamentals_only: Restrict the scan to the fundamental weights

    """
    if coefficient_bound < 1:
        raise errors.ModRepPreconditionError(f"Coefficient bound must be at least 1, got {coefficient_bound}")
    candidates: Sequence[Weight]
    if fundamentals_only:
        candidates = fundamental_weights(datum)
    else:
        candidates = [weight for weight in weight_grid(datum, coefficient_bound) if any(weight)]
    found = []
    for weight in candidates:
        if is_nonzero_multiplicity_free(datum, weight):
            found.append((weight, weyl_dimension(datum, weight)))
    logger.debug(f"Multiplicity-free scan of {datum.label} (bound {coefficient_bound}): {[w for w, _ in found]}")
    return found


def weights_under_dimension(datum: RootDatum, cap: int) -> list[tuple[Weight, int]]:
    """Every dominant weight with Weyl dimension at most `cap`, with its dimension, smallest first.

    The dimension grows strictly with each coordinate, so the search stops at the first weight above the cap.
    """
    zero: Weight = (0,) * datum.rank
    found = {zero: 1}
    frontier = [zero]
    while frontier:
        weight = frontier.pop()
        for i in range(datum.rank):
            following = tuple(x + (j == i) for j, x in enumerate(weight))
            if following in found:
                continue
            dimension = weyl_dimension(datum, following)
            if dimension <= cap:
                found[following] = dimension
                frontier.append(following)
    return sorted(found.items(), key=lambda item: (item[1], item[0]))


def character_from_weights(datum: RootDatum, weights: Mapping[Weight, int], highest: Optional[Sequence[int]] = None) -> WeightMultTable:
    """Collect a full weight census into a W-invariant table, checking W-invariance."""
    dominant: dict[Weight, int] = {}
    for weight, mult in weights.items():
        if mult <= 0:
            continue
        representative = dominant_representative(datum, weight)
        if representative in dominant and dominant[representative] != mult:
            raise errors.ModRepInvariantError(f"Weight census is not W-invariant at {weight}")
        dominant[representative] = mult
    if highest is None:
        highest = max(dominant, key=lambda weight: (sum(datum.weight_to_root(weight)), weight)) if dominant else (0,) * datum.rank
    return WeightMultTable(datum, highest, dominant)
