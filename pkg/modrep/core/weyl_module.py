"""Integral (Kostant Z-form) realizations of Weyl modules.

`construct_weyl_module` works in two passes:

1. Over Q, V(lambda) is built weight space by weight space below the highest
   weight. Every vector of weight mu != lambda is determined by the vectors
   e_k v, so the spanning set f_i V_{mu + alpha_i} is reduced to a basis by
   comparing these signatures. The contravariant form follows from
   <f_i x, y> = <x, e_i y>.
2. Root vectors e_beta, f_beta for non-simple beta are commutators of simple
   ones, and the lattice V_Z = U_Z^- v_lambda is generated weight space by
   weight space by the divided powers f_beta^(k) applied to higher lattices.
   All operators are then rewritten in a Z-basis of that lattice.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, TYPE_CHECKING

import numpy as np

from modrep.core import errors
from modrep.core._linalg import rational
from modrep.core.characters import character_from_weights
from modrep.core.characters import freudenthal_multiplicities
from modrep.core.characters import weyl_dimension
from modrep.core.logger import logger
from modrep.core.settings import Settings
from modrep.core.util.cache_hooks import cache_result
from modrep.core.util.context_managers import invariant_guard

if TYPE_CHECKING:
    from collections.abc import Sequence

    from modrep.core.characters import WeightMultTable
    from modrep.core.root_system import Root
    from modrep.core.root_system import RootDatum
    from modrep.core.root_system import Weight

OperatorKey = tuple[tuple[int, ...], int]  # (root in simple-root coordinates, divided power); negative roots lower


def _add(weight: Sequence[int], shift: Sequence[int], times: int = 1) -> Weight:
    return tuple(w + times * s for w, s in zip(weight, shift))


class BlockOperator:
    """A weight-homogeneous operator stored as one dense block per source weight.

    ``blocks[mu]`` maps the mu weight space to the ``mu + shift`` weight space;
    absent blocks are zero.
    """

    def __init__(self, shift: Sequence[int], blocks: Optional[dict[Weight, np.ndarray]] = None):
        self.shift: Weight = tuple(shift)
        self.blocks: dict[Weight, np.ndarray] = blocks if blocks is not None else {}

    def __repr__(self) -> str:
        return f"BlockOperator(shift={self.shift}, blocks={len(self.blocks)})"

    def target(self, source: Sequence[int]) -> Weight:
        return _add(source, self.shift)

    def apply(self, source: Weight, vectors: np.ndarray, target_dim: int) -> np.ndarray:
        block = self.blocks.get(source)
        if block is None:
            return rational.zeros(target_dim, vectors.shape[1])
        return block @ vectors

    def compose(self, inner: BlockOperator, dims: dict[Weight, int]) -> BlockOperator:
        """self after inner."""
        blocks = {}
        for source, block in inner.blocks.items():
            middle = inner.target(source)
            outer = self.blocks.get(middle)
            if outer is not None and self.target(middle) in dims:
                blocks[source] = outer @ block
        return BlockOperator(_add(self.shift, inner.shift), blocks)

    def combine(self, other: BlockOperator, factor: Fraction, dims: dict[Weight, int]) -> BlockOperator:
        """(self - other) * factor, for operators with the same shift."""
        blocks = {}
        for source in set(self.blocks) | set(other.blocks):
            rows, cols = dims[self.target(source)], dims[source]
            left = self.blocks.get(source, rational.zeros(rows, cols))
            right = other.blocks.get(source, rational.zeros(rows, cols))
            blocks[source] = (left - right) * factor
        return BlockOperator(self.shift, blocks)


class IntegralRep:
    """The Z-form of a Weyl module: weight-graded basis and divided-power operators.

    Basis vectors are grouped by weight, weights in order of depth below the
    highest weight. ``ops[(beta, k)]`` is e_beta^(k) for a positive root beta and
    f_{-beta}^(k) for a negative one.
    """

    def __init__(
        self,
        datum: RootDatum,
        highest: Weight,
        weights: Sequence[Weight],
        weight_dims: dict[Weight, int],
        ops: dict[OperatorKey, BlockOperator],
        gram: dict[Weight, np.ndarray],
    ):
        self.datum = datum
        self.highest = highest
        self.weights: tuple[Weight, ...] = tuple(weights)
        self.weight_dims = weight_dims
        self.ops = ops
        self.gram = gram
        self.offsets: dict[Weight, int] = {}
        offset = 0
        for weight in self.weights:
            self.offsets[weight] = offset
            offset += weight_dims[weight]
        self.dim = offset
        self.basis_weights: tuple[Weight, ...] = tuple(w for w in self.weights for _ in range(weight_dims[w]))
        self._dense: dict[OperatorKey, np.ndarray] = {}

    def __repr__(self) -> str:
        return f"IntegralRep({self.datum.label}, highest={self.highest}, dim={self.dim})"

    def operator_keys(self) -> list[OperatorKey]:
        return list(self.ops)

    def dense(self, key: OperatorKey) -> np.ndarray:
        """The operator as a dim x dim matrix of Python ints (zero if not present)."""
        if key not in self._dense:
            matrix = np.zeros((self.dim, self.dim), dtype=object)
            operator = self.ops.get(key)
            for source, block in (operator.blocks.items() if operator is not None else ()):
                row, col = self.offsets[operator.target(source)], self.offsets[source]  # type: ignore[union-attr]
                matrix[row : row + block.shape[0], col : col + block.shape[1]] = block
            self._dense[key] = matrix
        return self._dense[key]

    def character(self) -> WeightMultTable:
        return character_from_weights(self.datum, self.weight_dims, self.highest)

    def root_element(self, root: Sequence[int], t: int) -> np.ndarray:
        """x_root(t) = sum_k t^k e_root^(k) over Z."""
        root = _check_root(self.datum, root)
        result = np.identity(self.dim, dtype=int).astype(object)
        k = 1
        while (root, k) in self.ops:
            result = result + (t**k) * self.dense((root, k))
            k += 1
        return result


def _check_root(datum: RootDatum, root: Sequence[int]) -> Root:
    root = tuple(int(c) for c in root)
    if len(root) != datum.rank or not datum.is_root(root):
        raise errors.ModRepPreconditionError(f"{root} is not a root of {datum.label}")
    return root


def _negate(root: Sequence[int]) -> Root:
    return tuple(-c for c in root)


class _RationalModel:
    """V(lambda) over Q in the signature basis, with simple root operators and the contravariant form."""

    def __init__(self, datum: RootDatum, highest: Weight):
        self.datum = datum
        self.highest = highest
        rank = datum.rank
        self.simple_shifts = [datum.root_to_weight(datum.simple_root(i)) for i in range(rank)]
        self.raising = [BlockOperator(shift) for shift in self.simple_shifts]
        self.lowering = [BlockOperator(_negate(shift)) for shift in self.simple_shifts]
        self.dims: dict[Weight, int] = {highest: 1}
        self.weights: list[Weight] = [highest]
        self.origins: dict[Weight, list[tuple[int, int]]] = {highest: []}
        self.gram: dict[Weight, np.ndarray] = {highest: rational.identity(1)}
        self._build()

    def _build(self) -> None:
        level = [self.highest]
        while level:
            candidates = {_add(weight, shift, -1) for weight in level for shift in self.simple_shifts}
            level = [weight for weight in sorted(candidates, reverse=True) if self._build_weight(weight)]
            self.weights.extend(level)

    def _build_weight(self, weight: Weight) -> bool:
        rank = self.datum.rank
        dims = self.dims
        candidates = [
            (i, b) for i in range(rank) if (source := _add(weight, self.simple_shifts[i])) in dims for b in range(dims[source])
        ]
        targets = [k for k in range(rank) if _add(weight, self.simple_shifts[k]) in dims]
        offsets, height = {}, 0
        for k in targets:
            offsets[k] = height
            height += dims[_add(weight, self.simple_shifts[k])]
        signatures = rational.zeros(height, len(candidates))
        for column, (i, b) in enumerate(candidates):
            source = _add(weight, self.simple_shifts[i])
            for k in targets:
                upper = _add(weight, self.simple_shifts[k])
                top = _add(source, self.simple_shifts[k])
                # e_k f_i b = f_i e_k b + [k == i] <source, alpha_i^vee> b
                if top in dims and source in self.raising[k].blocks:
                    raised = self.raising[k].blocks[source][:, b : b + 1]
                    vector = self.lowering[i].apply(top, raised, dims[upper])[:, 0]
                    signatures[offsets[k] : offsets[k] + dims[upper], column] += vector
                if k == i:
                    signatures[offsets[k] + b, column] += source[i]
        reduced, pivots = rational.rref(signatures)
        if not pivots:
            return False
        dim = len(pivots)
        dims[weight] = dim
        self.origins[weight] = [candidates[c] for c in pivots]
        for i in range(rank):
            source = _add(weight, self.simple_shifts[i])
            if source not in dims:
                continue
            block = rational.zeros(dim, dims[source])
            for column, (j, b) in enumerate(candidates):
                if j == i:
                    block[:, b] = reduced[:, column]
            self.lowering[i].blocks[source] = block
        for k in targets:
            upper = _add(weight, self.simple_shifts[k])
            rows = slice(offsets[k], offsets[k] + dims[upper])
            self.raising[k].blocks[weight] = signatures[rows, pivots].copy()
        gram = rational.zeros(dim, dim)
        for t, (i, b) in enumerate(self.origins[weight]):
            # <f_i b, w> = <b, e_i w>
            source = _add(weight, self.simple_shifts[i])
            gram[t, :] = self.gram[source][b, :] @ self.raising[i].blocks[weight]
        self.gram[weight] = gram
        return True

    def root_operators(self) -> dict[Root, BlockOperator]:
        """e_beta for positive beta, f_beta under the key -beta, as commutators of simple root vectors."""
        datum = self.datum
        operators: dict[Root, BlockOperator] = {}
        for root in datum.positive_roots:
            if sum(root) == 1:
                i = root.index(1)
                operators[root] = self.raising[i]
                operators[_negate(root)] = self.lowering[i]
                continue
            i = next(i for i in range(datum.rank) if root[i] > 0 and _add(root, datum.simple_root(i), -1) in datum.positive_roots)
            simple = datum.simple_root(i)
            inner = _add(root, simple, -1)
            r = 0
            while datum.is_root(_add(inner, simple, -(r + 1))):
                r += 1
            factor = Fraction(1, r + 1)
            e_i, e_inner = operators[simple], operators[inner]
            f_i, f_inner = operators[_negate(simple)], operators[_negate(inner)]
            # e_beta = [e_i, e_gamma] / (r + 1), f_beta = [f_gamma, f_i] / (r + 1)
            operators[root] = e_i.compose(e_inner, self.dims).combine(e_inner.compose(e_i, self.dims), factor, self.dims)
            operators[_negate(root)] = f_inner.compose(f_i, self.dims).combine(f_i.compose(f_inner, self.dims), factor, self.dims)
        return operators


def _lattice_bases(model: _RationalModel, operators: dict[Root, BlockOperator]) -> dict[Weight, np.ndarray]:
    """Z-bases (as columns in the rational basis) of the weight lattices of U_Z^- v_lambda."""
    datum, dims = model.datum, model.dims
    bases = {model.highest: rational.identity(1)}
    chains: dict[tuple[Root, Weight, int], np.ndarray] = {}
    for weight in model.weights[1:]:
        generators = []
        for root in datum.positive_roots:
            lowering = operators[_negate(root)]
            shift = datum.root_to_weight(root)
            k = 1
            while (upper := _add(weight, shift, k)) in dims:
                previous = bases[upper] if k == 1 else chains[root, upper, k - 1]
                vectors = lowering.apply(_add(weight, shift), previous, dims[weight]) / k
                chains[root, upper, k] = vectors
                generators.append(vectors)
                k += 1
        basis = rational.lattice_column_basis(np.hstack(generators))
        if basis.shape != (dims[weight], dims[weight]):
            raise errors.ModRepInvariantError(f"Lattice at weight {weight} has rank {basis.shape[1]}, expected {dims[weight]}")
        bases[weight] = basis
    return bases


def _divided_powers(
    datum: RootDatum, dims: dict[Weight, int], root: Root, first: dict[Weight, np.ndarray]
) -> dict[OperatorKey, BlockOperator]:
    shift = datum.root_to_weight(root)
    ops = {(root, 1): BlockOperator(shift, first)}
    k = 1
    while True:
        previous = ops[root, k].blocks
        blocks = {}
        for source, block in previous.items():
            middle = _add(source, shift, k)
            if middle in first:
                product = first[middle] @ block
                if any(value % (k + 1) != 0 for value in product.flat):
                    raise errors.ModRepInvariantError(f"Divided power ({root}, {k + 1}) is not integral at {source}")
                blocks[source] = product // (k + 1)
        if not blocks:
            return ops
        k += 1
        ops[root, k] = BlockOperator(_add(shift, shift, k - 1), blocks)


def _check_serre(rep: IntegralRep) -> None:
    """[e_i, f_i] acts on the mu weight space as <mu, alpha_i^vee>."""
    datum = rep.datum
    for i in range(datum.rank):
        simple = datum.simple_root(i)
        e_i, f_i = rep.ops.get((simple, 1)), rep.ops.get((_negate(simple), 1))
        for weight in rep.weights:
            size = rep.weight_dims[weight]
            value = np.zeros((size, size), dtype=object)
            below = _add(weight, datum.root_to_weight(simple), -1)
            above = _add(weight, datum.root_to_weight(simple))
            if f_i is not None and e_i is not None and weight in f_i.blocks and below in e_i.blocks:
                value = value + e_i.blocks[below] @ f_i.blocks[weight]
            if e_i is not None and f_i is not None and weight in e_i.blocks and above in f_i.blocks:
                value = value - f_i.blocks[above] @ e_i.blocks[weight]
            if not all(value[a, b] == (weight[i] if a == b else 0) for a in range(size) for b in range(size)):
                raise errors.ModRepInvariantError(f"[e_{i + 1}, f_{i + 1}] is not <mu, alpha^vee> at weight {weight}")


def construct_weyl_module(datum: RootDatum, highest: Weight, *, size_cap: Optional[int] = None) -> IntegralRep:
    """Build the Z-form of the Weyl module V(highest).

    Args:
        datum: Root datum
        highest: Dominant highest weight
        size_cap: Largest Weyl dimension to construct, defaults to `Settings.size_cap`

    Raises:
        ModRepSizeCapError: The Weyl dimension exceeds the cap

    """
    highest = tuple(int(x) for x in highest)
    cap = Settings.size_cap if size_cap is None else size_cap
    dimension = weyl_dimension(datum, highest)
    if dimension > cap:
        raise errors.ModRepSizeCapError(f"V{highest} for {datum.label} has dimension {dimension}, above the size cap {cap}")
    return _build_weyl_module(datum, highest)


# the cap is checked before the cache lookup
@cache_result(key="weyl_module")
def _build_weyl_module(datum: RootDatum, highest: Weight) -> IntegralRep:
    model = _RationalModel(datum, highest)
    expected = freudenthal_multiplicities(datum, highest)
    with invariant_guard(f"character of V{highest} for {datum.label}"):
        if character_from_weights(datum, model.dims, highest) != expected:
            raise errors.ModRepInvariantError(f"Constructed weights of V{highest} disagree with Freudenthal")
    logger.debug(f"V{highest} for {datum.label}: rational model with {len(model.weights)} weight spaces, dim {sum(model.dims.values())}")

    operators = model.root_operators()
    bases = _lattice_bases(model, operators)
    inverses = {weight: rational.inverse(basis) for weight, basis in bases.items()}

    ops: dict[OperatorKey, BlockOperator] = {}
    for key, operator in operators.items():
        first = {}
        for source, block in operator.blocks.items():
            target = operator.target(source)
            integral = inverses[target] @ block @ bases[source]
            try:
                first[source] = rational.integer_array(integral)
            except ValueError as err:
                raise errors.ModRepInvariantError(f"Root vector {key} is not integral on the lattice at {source}: {err}") from None
        ops.update(_divided_powers(datum, model.dims, key, first))

    gram = {}
    for weight, basis in bases.items():
        try:
            gram[weight] = rational.integer_array(basis.T @ model.gram[weight] @ basis)
        except ValueError as err:
            raise errors.ModRepInvariantError(f"Contravariant form is not integral at {weight}: {err}") from None

    rep = IntegralRep(datum, highest, model.weights, model.dims, ops, gram)
    with invariant_guard(f"Chevalley relations on V{highest} for {datum.label}"):
        _check_serre(rep)
        for weight, matrix in gram.items():
            if not (matrix == matrix.T).all():
                raise errors.ModRepInvariantError(f"Contravariant form is not symmetric at {weight}")
    logger.debug(f"V{highest} for {datum.label}: Z-form with {len(ops)} divided-power operators")
    return rep


def contravariant_gram(rep: IntegralRep) -> dict[Weight, np.ndarray]:
    """Per-weight-space Gram matrices of the contravariant form on the Z-basis, <v_lambda, v_lambda> = 1."""
    return {weight: matrix.copy() for weight, matrix in rep.gram.items()}


def gram_determinants(rep: IntegralRep) -> dict[Weight, int]:
    determinants = {}
    for weight, matrix in rep.gram.items():
        determinants[weight] = _determinant(matrix)
    return determinants


def _determinant(matrix: np.ndarray) -> int:
    work = rational.fraction_array(matrix)
    size = work.shape[0]
    determinant = Fraction(1)
    for c in range(size):
        nonzero = [r for r in range(c, size) if work[r, c] != 0]
        if not nonzero:
            return 0
        pivot = nonzero[0]
        if pivot != c:
            work[[c, pivot]] = work[[pivot, c]]
            determinant = -determinant
        determinant *= work[c, c]
        for r in range(c + 1, size):
            if work[r, c] != 0:
                work[r] = work[r] - work[c] * (work[r, c] / work[c, c])
    return int(determinant)

