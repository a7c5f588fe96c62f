"""Modules over the prime field F_p: reductions, irreducible heads, twists and tensor products."""

from __future__ import annotations

from collections import Counter
from typing import TYPE_CHECKING, Union

import numpy as np

from modrep.core import errors
from modrep.core._linalg import modp
from modrep.core.characters import character_from_weights
from modrep.core.logger import logger
from modrep.core.util.cache_hooks import cache_result
from modrep.core.util.context_managers import invariant_guard
from modrep.core.util.type_coercion import is_prime
from modrep.core.weyl_module import IntegralRep

if TYPE_CHECKING:
    from collections.abc import Sequence

    from modrep.core.characters import WeightMultTable
    from modrep.core.root_system import RootDatum
    from modrep.core.root_system import Weight
    from modrep.core.weyl_module import OperatorKey


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise errors.ModRepPreconditionError(f"{p} is not prime")
    return p


class ModularModule:
    """A representation over F_p of the hyperalgebra of a root datum.

    ``ops[(beta, k)]`` is the matrix of e_beta^(k) (beta positive) or
    f_{-beta}^(k) (beta negative); missing keys act as zero. Root elements
    x_beta(t) are the finite sums of t^k times these operators.
    """

    def __init__(
        self,
        datum: RootDatum,
        p: int,
        highest: Sequence[int],
        basis_weights: Sequence[Weight],
        ops: dict[OperatorKey, np.ndarray],
    ):
        self.datum = datum
        self.p = p
        self.highest: Weight = tuple(highest)
        self.basis_weights: tuple[Weight, ...] = tuple(basis_weights)
        self.dim = len(self.basis_weights)
        self.ops = {key: matrix for key, matrix in ops.items() if matrix.any()}

    def __repr__(self) -> str:
        return f"ModularModule({self.datum.label}, p={self.p}, highest={self.highest}, dim={self.dim})"

    def operator(self, root: Sequence[int], k: int) -> np.ndarray:
        matrix = self.ops.get((tuple(root), k))
        return matrix if matrix is not None else np.zeros((self.dim, self.dim), dtype=np.int64)

    def max_power(self, root: Sequence[int]) -> int:
        return max((k for (key, k) in self.ops if key == tuple(root)), default=0)

    def root_element(self, root: Sequence[int], t: int) -> np.ndarray:
        """x_root(t) over F_p."""
        root = tuple(int(c) for c in root)
        if len(root) != self.datum.rank or not self.datum.is_root(root):
            raise errors.ModRepPreconditionError(f"{root} is not a root of {self.datum.label}")
        result = np.eye(self.dim, dtype=np.int64)
        scalar = t % self.p
        for k in range(1, self.max_power(root) + 1):
            matrix = self.ops.get((root, k))
            if matrix is not None:
                result = (result + modp.scale_mod_p(matrix, pow(scalar, k, self.p), self.p)) % self.p
        return result


def weyl_module_mod_p(rep: IntegralRep, p: int) -> ModularModule:
    """The full Weyl module V(lambda) reduced modulo p."""
    check_prime(p)
    ops = {key: modp.reduce_mod_p(rep.dense(key), p) for key in rep.ops}
    return ModularModule(rep.datum, p, rep.highest, rep.basis_weights, ops)


class _Quotient:
    """Quotient of one weight space by the radical of the Gram matrix mod p."""

    def __init__(self, gram: np.ndarray, p: int):
        self.projection, pivots = modp.rref_mod_p(gram, p)  # rows span the row space; kernel = radical
        size = gram.shape[0]
        self.section = np.zeros((size, len(pivots)), dtype=np.int64)
        for t, c in enumerate(pivots):
            self.section[c, t] = 1
        self.radical = modp.nullspace_mod_p(gram, p)
        self.dim = len(pivots)


@cache_result(key="head")
def irreducible_head_mod_p(rep: IntegralRep, p: int) -> ModularModule:
    """L(lambda) = V(lambda) / rad, with the radical of the contravariant form taken weight space by weight space."""
    check_prime(p)
    quotients = {weight: _Quotient(rep.gram[weight], p) for weight in rep.weights}
    weights = [weight for weight in rep.weights if quotients[weight].dim > 0]
    offsets, offset = {}, 0
    for weight in weights:
        offsets[weight] = offset
        offset += quotients[weight].dim
    if quotients[rep.highest].dim != 1:
        raise errors.ModRepInvariantError(f"Highest weight space of V{rep.highest} lies in the radical mod {p}")

    ops = {}
    for key, operator in rep.ops.items():
        matrix = np.zeros((offset, offset), dtype=np.int64)
        for source, block in operator.blocks.items():
            target = operator.target(source)
            if source not in offsets or target not in offsets:
                continue
            into, out_of = quotients[target], quotients[source]
            reduced = modp.reduce_mod_p(block, p)
            with invariant_guard(f"radical stability of V{rep.highest} mod {p} under {key}"):
                leak = modp.matmul_mod_p(modp.matmul_mod_p(into.projection, reduced, p), out_of.radical, p)
                if leak.any():
                    raise errors.ModRepInvariantError(f"Operator {key} does not preserve the radical at weight {source}")
            head_block = modp.matmul_mod_p(modp.matmul_mod_p(into.projection, reduced, p), out_of.section, p)
            row, col = offsets[target], offsets[source]
            matrix[row : row + into.dim, col : col + out_of.dim] = head_block
        ops[key] = matrix
    basis_weights = [weight for weight in weights for _ in range(quotients[weight].dim)]
    logger.debug(f"L{rep.highest} for {rep.datum.label} mod {p}: dim {offset} (Weyl module dim {rep.dim})")
    return ModularModule(rep.datum, p, rep.highest, basis_weights, ops)


def radical_weights(rep: IntegralRep, p: int) -> dict[Weight, int]:
    """Dimension of the radical of V(lambda) mod p in each weight space where it is non-zero."""
    check_prime(p)
    census = {}
    for weight in rep.weights:
        corank = rep.weight_dims[weight] - modp.rank_mod_p(rep.gram[weight], p)
        if corank:
            census[weight] = corank
    return census


def modular_weight_multiplicities(module: ModularModule) -> WeightMultTable:
    return character_from_weights(module.datum, Counter(module.basis_weights), module.highest)


def root_element(module: Union[ModularModule, IntegralRep], root: Sequence[int], t: int) -> np.ndarray:
    """x_root(t) on a modular module (over F_p) or on an integral form (over Z)."""
    return module.root_element(root, t)


def frobenius_twist(module: ModularModule) -> ModularModule:
    """The Frobenius twist: e^(k) acts as the untwisted e^(k/p) when p | k, else as zero."""
    p = module.p
    ops = {(root, k * p): matrix for (root, k), matrix in module.ops.items()}
    basis_weights = [tuple(p * x for x in weight) for weight in module.basis_weights]
    return ModularModule(module.datum, p, tuple(p * x for x in module.highest), basis_weights, ops)


def tensor_product(left: ModularModule, right: ModularModule) -> ModularModule:
    """Tensor product with the coproduct of divided powers: e^(k) acts as sum over a + b = k of e^(a) x e^(b)."""
    if left.p != right.p:
        raise errors.ModRepPreconditionError(f"Cannot tensor modules over F_{left.p} and F_{right.p}")
    if left.datum != right.datum:
        raise errors.ModRepPreconditionError(f"Cannot tensor modules for {left.datum.label} and {right.datum.label}")
    p = left.p
    roots = {root for root, _ in left.ops} | {root for root, _ in right.ops}
    ops = {}
    for root in roots:
        top_left, top_right = left.max_power(root), right.max_power(root)
        for k in range(1, top_left + top_right + 1):
            total = np.zeros((left.dim * right.dim,) * 2, dtype=np.int64)
            for a in range(max(0, k - top_right), min(k, top_left) + 1):
                factor_left = np.eye(left.dim, dtype=np.int64) if a == 0 else left.ops.get((root, a))
                factor_right = np.eye(right.dim, dtype=np.int64) if a == k else right.ops.get((root, k - a))
                if factor_left is not None and factor_right is not None:
                    total = (total + modp.kron_mod_p(factor_left, factor_right, p)) % p
            ops[root, k] = total
    basis_weights = [tuple(x + y for x, y in zip(u, v)) for u in left.basis_weights for v in right.basis_weights]
    highest = tuple(x + y for x, y in zip(left.highest, right.highest))
    return ModularModule(left.datum, p, highest, basis_weights, ops)


def steinberg_product(modules: Sequence[ModularModule], twists: Sequence[int]) -> ModularModule:
    """Tensor product of Frobenius twists: the i-th factor twisted twists[i] times."""
    if not modules or len(modules) != len(twists):
        raise errors.ModRepPreconditionError("steinberg_product needs one twist per module and at least one module")
    p = modules[0].p
    for module in modules:
        if module.p != p:
            raise errors.ModRepPreconditionError(f"Mismatched primes {p} and {module.p}")
        if any(x >= p for x in module.highest):
            raise errors.ModRepPreconditionError(f"Highest weight {module.highest} is not {p}-restricted")
    if any(twist < 0 for twist in twists):
        raise errors.ModRepPreconditionError(f"Twists must be non-negative, got {tuple(twists)}")
    result = None
    for module, twist in zip(modules, twists):
        for _ in range(twist):
            module = frobenius_twist(module)
        result = module if result is None else tensor_product(result, module)
    return result  # type: ignore[return-value]


def trivial_fixed_space(module: ModularModule) -> int:
    """Dimension of the joint kernel of every e_beta^(k), f_beta^(k) with k >= 1."""
    p = module.p
    kernel = np.eye(module.dim, dtype=np.int64)
    for key in sorted(module.ops):
        if kernel.shape[1] == 0:
            break
        image = modp.matmul_mod_p(module.ops[key], kernel, p)
        kernel = modp.matmul_mod_p(kernel, modp.nullspace_mod_p(image, p), p)
    return kernel.shape[1]


def trivial_module(datum: RootDatum, p: int) -> ModularModule:
    return ModularModule(datum, check_prime(p), (0,) * datum.rank, [(0,) * datum.rank], {})
