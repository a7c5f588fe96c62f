"""Root systems, Weyl groups and weight combinatorics for the simple types A-G.

Conventions (Bourbaki node labelling throughout):

* ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` is alpha_i written
  in the fundamental-weight basis.
* Weights are integer tuples of fundamental-weight coordinates; roots are
  integer tuples of simple-root coordinates.
* ``symmetrizer[i] = (alpha_i, alpha_i) / 2`` with short roots normalised to 1,
  so ``(alpha_i, alpha_j) = cartan[i][j] * symmetrizer[j]``.
"""

from __future__ import annotations

from fractions import Fraction
import itertools
import math
from typing import Literal, Optional, TYPE_CHECKING

from modrep.core import errors
from modrep.core._linalg import rational
from modrep.core.logger import logger
from modrep.core.util.cache_hooks import cache_result

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

TYPES_LIE = Literal["A", "B", "C", "D", "E", "F", "G"]
Weight = tuple[int, ...]
Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_E_ORDERS = {6: 51_840, 7: 2_903_040, 8: 696_729_600}


def _edges(lie_type: str, rank: int) -> list[tuple[int, int]]:
    if lie_type == "D":
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    if lie_type == "E":
        return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, rank - 1)]
    return [(i, i + 1) for i in range(rank - 1)]


def cartan_matrix(lie_type: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of a simple type, Bourbaki labelling."""
    lie_type = lie_type.upper()
    if lie_type in _MIN_RANK:
        valid = rank >= _MIN_RANK[lie_type]
    else:
        valid = rank in _EXCEPTIONAL_RANKS.get(lie_type, ())
    if not valid:
        raise errors.ModRepPreconditionError(f"No simple root system of type {lie_type}{rank}")

    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in _edges(lie_type, rank):
        cartan[i][j] = cartan[j][i] = -1
    if lie_type == "B":
        cartan[rank - 2][rank - 1] = -2  # alpha_n short
    elif lie_type == "C":
        cartan[rank - 1][rank - 2] = -2  # alpha_n long
    elif lie_type == "F":
        cartan[1][2] = -2  # alpha_1, alpha_2 long
    elif lie_type == "G":
        cartan[1][0] = -3  # alpha_1 short
    return tuple(tuple(row) for row in cartan)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Half squared lengths of the simple roots, short roots 1, per connected component."""
    rank = len(cartan)
    lengths: list[Optional[Fraction]] = [None] * rank
    for start in range(rank):
        if lengths[start] is not None:
            continue
        lengths[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(rank):
                if j != i and cartan[i][j] != 0 and lengths[j] is None:
                    # (a_i, a_j) = A[i][j] d_j = A[j][i] d_i
                    lengths[j] = lengths[i] * cartan[j][i] / cartan[i][j]  # type: ignore[operator]
                    stack.append(j)
        component = [k for k in range(rank) if _connected(cartan, start, k)]
        shortest = min(lengths[k] for k in component)  # type: ignore[type-var]
        for k in component:
            lengths[k] = lengths[k] / shortest  # type: ignore[operator]
    return tuple(int(length) for length in lengths)  # type: ignore[arg-type]


def _connected(cartan: Sequence[Sequence[int]], start: int, end: int) -> bool:
    seen = {start}
    stack = [start]
    while stack:
        i = stack.pop()
        for j, entry in enumerate(cartan[i]):
            if entry != 0 and j not in seen:
                seen.add(j)
                stack.append(j)
    return end in seen


def _components(cartan: Sequence[Sequence[int]]) -> list[list[int]]:
    remaining = list(range(len(cartan)))
    components = []
    while remaining:
        component = [k for k in remaining if _connected(cartan, remaining[0], k)]
        components.append(component)
        remaining = [k for k in remaining if k not in component]
    return components


def classify_component(cartan: Sequence[Sequence[int]], nodes: Sequence[int]) -> tuple[str, int]:
    """Cartan type of a connected sub-diagram, e.g. ("B", 3)."""
    size = len(nodes)
    bonds = {}
    degree = {i: 0 for i in nodes}
    for i, j in itertools.combinations(nodes, 2):
        if cartan[i][j] != 0:
            bonds[i, j] = cartan[i][j] * cartan[j][i]
            degree[i] += 1
            degree[j] += 1
    if any(bond == 3 for bond in bonds.values()):
        return "G", 2
    double = [pair for pair, bond in bonds.items() if bond == 2]
    if double:
        i, j = double[0]
        if size == 4 and degree[i] == 2 and degree[j] == 2:
            return "F", 4
        short_end = j if cartan[i][j] == -2 else i  # <long, short^vee> = -2
        ends = [k for k in nodes if degree[k] <= 1]
        return ("B" if short_end in ends or size == 2 else "C"), size
    branch = [k for k in nodes if degree[k] == 3]
    if not branch:
        return "A", size
    centre = branch[0]
    arms = []
    for neighbour in (k for k in nodes if (min(centre, k), max(centre, k)) in bonds):
        length, previous, current = 1, centre, neighbour
        while True:
            following = [k for k in nodes if k not in (previous, current) and (min(current, k), max(current, k)) in bonds]
            if not following:
                break
            previous, current = current, following[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return "D", size
    return "E", size


def weyl_group_order_of_type(lie_type: str, rank: int) -> int:
    if lie_type == "A":
        return math.factorial(rank + 1)
    if lie_type in ("B", "C"):
        return 2**rank * math.factorial(rank)
    if lie_type == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    if lie_type == "E":
        return _E_ORDERS[rank]
    if lie_type == "F":
        return 1152
    if lie_type == "G":
        return 12
    raise errors.ModRepPreconditionError(f"No Weyl group of type {lie_type}{rank}")


class RootDatum:
    """A (possibly reducible) root system given by its Cartan matrix.

    Simple data come from `build_root_system`; Levi subsystems from
    `levi_datum`, which records the ambient node indices in `nodes`.
    Instances are immutable and hashable.
    """

    def __init__(self, lie_type: Optional[str], cartan: Sequence[Sequence[int]], nodes: Optional[Sequence[int]] = None):
        self.cartan: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in cartan)
        self.rank = len(self.cartan)
        self.nodes: tuple[int, ...] = tuple(nodes) if nodes is not None else tuple(range(self.rank))
        self.symmetrizer = _symmetrizer(self.cartan)
        self.components: tuple[tuple[str, int, tuple[int, ...]], ...] = tuple(
            (*classify_component(self.cartan, nodes_), tuple(nodes_)) for nodes_ in _components(self.cartan)
        )
        self.lie_type = lie_type or self.label
        self._cartan_inverse = rational.inverse(rational.fraction_array(self.cartan)) if self.rank else None
        self.positive_roots: tuple[Root, ...] = self._close_roots()
        self._root_set = frozenset(self.positive_roots)
        longest = max((self.root_norm(root) for root in self.positive_roots), default=0)
        self.root_lengths: tuple[Literal["long", "short"], ...] = tuple(
            "long" if self.root_norm(root) == longest else "short" for root in self.positive_roots
        )
        self.weyl_order = math.prod(weyl_group_order_of_type(kind, size) for kind, size, _ in self.components)

    def __repr__(self) -> str:
        return f"RootDatum({self.label})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootDatum):
            return NotImplemented
        return (self.cartan, self.nodes) == (other.cartan, other.nodes)

    def __hash__(self) -> int:
        return hash((self.cartan, self.nodes))

    @property
    def label(self) -> str:
        return "+".join(f"{kind}{size}" for kind, size, _ in self.components) or "trivial"

    def _close_roots(self) -> tuple[Root, ...]:
        """Positive roots by root-string closure, ordered by height then lexicographically."""
        simple = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        found = set(simple)
        level = sorted(simple, reverse=True)
        ordered = list(level)
        while level:
            following = set()
            for root in level:
                for i in range(self.rank):
                    q = 0
                    while tuple(c - (q + 1) * (k == i) for k, c in enumerate(root)) in found:
                        q += 1
                    r = q - self.coroot_pairing(self.root_to_weight(root), i)
                    if r > 0:
                        following.add(tuple(c + (k == i) for k, c in enumerate(root)))
            level = sorted(following - found, reverse=True)
            found.update(level)
            ordered.extend(level)
        return tuple(ordered)

    # -- coordinates and forms ---------------------------------------------------------------------

    def root_to_weight(self, root: Sequence[int]) -> Weight:
        """Simple-root coordinates to fundamental-weight coordinates."""
        return tuple(sum(root[i] * self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank))

    def weight_to_root(self, weight: Sequence[int]) -> tuple[Fraction, ...]:
        """Fundamental-weight coordinates to (rational) simple-root coordinates."""
        inverse = self._cartan_inverse
        return tuple(sum((weight[j] * inverse[j, k] for j in range(self.rank)), Fraction(0)) for k in range(self.rank))  # type: ignore[index]

    def coroot_pairing(self, weight: Sequence[int], i: int) -> int:
        """<weight, alpha_i^vee>: the i-th fundamental-weight coordinate."""
        return weight[i]

    def root_pairing(self, weight: Sequence[int], root: Sequence[int]) -> int:
        """(weight, root) for a root in simple-root coordinates; always an integer."""
        return sum(n * d * x for n, d, x in zip(root, self.symmetrizer, weight))

    def form(self, left: Sequence[int], right: Sequence[int]) -> Fraction:
        """The invariant form on weights, normalised by (short root, short root) = 2."""
        return sum((Fraction(n) * d * x for n, d, x in zip(self.weight_to_root(left), self.symmetrizer, right)), Fraction(0))

    def root_norm(self, root: Sequence[int]) -> int:
        return self.root_pairing(self.root_to_weight(root), root)

    def is_root(self, root: Sequence[int]) -> bool:
        root = tuple(root)
        return root in self._root_set or tuple(-c for c in root) in self._root_set

    def simple_root(self, i: int) -> Root:
        return tuple(int(i == j) for j in range(self.rank))

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    # -- Weyl group ------------------------------------------------------------------------------

    def reflect(self, weight: Sequence[int], i: int) -> Weight:
        """Simple reflection s_i(x) = x - <x, alpha_i^vee> alpha_i."""
        coefficient = weight[i]
        return tuple(x - coefficient * a for x, a in zip(weight, self.cartan[i]))

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(x >= 0 for x in weight)


def _check_weight(datum: RootDatum, weight: Sequence[int]) -> Weight:
    if len(weight) != datum.rank:
        raise errors.ModRepPreconditionError(f"Weight {tuple(weight)} has {len(weight)} coordinates, {datum.label} has rank {datum.rank}")
    return tuple(int(x) for x in weight)


@cache_result(key="root_system")
def build_root_system(lie_type: TYPES_LIE, rank: int) -> RootDatum:
    """Build the simple root datum of type `lie_type` and `rank`."""
    datum = RootDatum(lie_type.upper(), cartan_matrix(lie_type, rank))
    logger.debug(f"Built root system {datum.label}: {len(datum.positive_roots)} positive roots, |W| = {datum.weyl_order}")
    return datum


@cache_result(key="levi_datum")
def levi_datum(datum: RootDatum, nodes: tuple[int, ...]) -> RootDatum:
    """Root datum of the Levi subsystem on the given (ambient, 0-based) nodes, in ascending order."""
    nodes = tuple(sorted(set(nodes)))
    if any(not 0 <= node < datum.rank for node in nodes):
        raise errors.ModRepPreconditionError(f"Levi nodes {nodes} out of range for {datum.label}")
    cartan = [[datum.cartan[i][j] for j in nodes] for i in nodes]
    ambient = tuple(datum.nodes[i] for i in nodes)
    return RootDatum(None, cartan, nodes=ambient)


def weyl_group_order(datum: RootDatum) -> int:
    return datum.weyl_order


def weyl_orbit(datum: RootDatum, weight: Sequence[int]) -> frozenset[Weight]:
    """All images of `weight` under the Weyl group, by reflection closure."""
    start = _check_weight(datum, weight)
    orbit = {start}
    stack = [start]
    while stack:
        current = stack.pop()
        for i in range(datum.rank):
            if current[i] != 0:
                image = datum.reflect(current, i)
                if image not in orbit:
                    orbit.add(image)
                    stack.append(image)
    return frozenset(orbit)


def dominant_representative(datum: RootDatum, weight: Sequence[int]) -> Weight:
    """The unique dominant weight in the Weyl orbit of `weight`."""
    current = _check_weight(datum, weight)
    while True:
        negative = next((i for i, x in enumerate(current) if x < 0), None)
        if negative is None:
            return current
        current = datum.reflect(current, negative)


def weight_stabilizer_order(datum: RootDatum, weight: Sequence[int]) -> int:
    """Order of the stabilizer of a dominant weight: the Weyl group of the nodes where it vanishes."""
    weight = _check_weight(datum, weight)
    if not datum.is_dominant(weight):
        raise errors.ModRepPreconditionError(f"Weight {weight} is not dominant")
    zero_nodes = tuple(i for i, x in enumerate(weight) if x == 0)
    if not zero_nodes:
        return 1
    return levi_datum(datum, zero_nodes).weyl_order


def orbit_size(datum: RootDatum, weight: Sequence[int]) -> int:
    dominant = dominant_representative(datum, weight)
    return datum.weyl_order // weight_stabilizer_order(datum, dominant)


def fundamental_weights(datum: RootDatum) -> list[Weight]:
    return [tuple(int(i == j) for j in range(datum.rank)) for i in range(datum.rank)]


def weight_grid(datum: RootDatum, bound: int) -> Iterable[Weight]:
    """Dominant weights with every coordinate at most `bound`, lexicographic order."""
    return itertools.product(range(bound + 1), repeat=datum.rank)
