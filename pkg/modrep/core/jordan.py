"""Jordan types of unipotent matrices over prime fields, and the dimension bounds they feed."""

from __future__ import annotations

from typing import Optional

import numpy as np

from modrep.core import errors
from modrep.core._linalg import modp
from modrep.core.schemas.jordan import BoundInputs
from modrep.core.schemas.jordan import JordanType


def _nilpotent_part(u: np.ndarray, p: int) -> np.ndarray:
    size = u.shape[0]
    if u.shape != (size, size):
        raise errors.ModRepPreconditionError(f"Expected a square matrix, got shape {u.shape}")
    return (modp.reduce_mod_p(u, p) - np.eye(size, dtype=np.int64)) % p


def rank_sequence(u: np.ndarray, p: int) -> list[int]:
    """Ranks of (u - 1)^k over F_p for k = 0, 1, ... until they reach 0.

    Raises:
        ModRepPreconditionError: u - 1 is not nilpotent

    """
    nilpotent = _nilpotent_part(u, p)
    image = np.eye(nilpotent.shape[0], dtype=np.int64)
    ranks = [image.shape[1]]
    while ranks[-1] > 0:
        image = modp.column_basis_mod_p(modp.matmul_mod_p(nilpotent, image, p), p)
        if image.shape[1] == ranks[-1]:
            raise errors.ModRepPreconditionError(
                f"Matrix is not unipotent over F_{p}: (u - 1)^k has stable rank {ranks[-1]} (eigenvalue other than 1)"
            )
        ranks.append(image.shape[1])
    return ranks


def jordan_type(u: np.ndarray, p: int) -> JordanType:
    """Block sizes from ranks: #blocks of size >= k is rank (u-1)^(k-1) - rank (u-1)^k."""
    ranks = rank_sequence(u, p) + [0]
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    blocks = []
    for k, count in enumerate(at_least, start=1):
        following = at_least[k] if k < len(at_least) else 0
        blocks.extend([k] * (count - following))
    return JordanType(blocks=tuple(blocks))


def jordan_block(size: int, p: int) -> np.ndarray:
    return (np.eye(size, dtype=np.int64) + np.eye(size, k=1, dtype=np.int64)) % p


def tensor_jordan(m: int, n: int, p: int) -> JordanType:
    """Jordan type of J_m (x) J_n over F_p, by the Kronecker product."""
    if m < 1 or n < 1:
        raise errors.ModRepPreconditionError(f"Block sizes must be positive, got {m} and {n}")
    return jordan_type(np.kron(jordan_block(m, p), jordan_block(n, p)), p)


def single_nontrivial_block(jordan: JordanType) -> bool:
    return len(jordan.nontrivial) <= 1


def unipotent_order(jordan: JordanType, p: int) -> int:
    """p^e for the least e with p^e >= the largest block."""
    largest = jordan.blocks[0] if jordan.blocks else 1
    order = 1
    while order < largest:
        order *= p
    return order


def matrix_order(u: np.ndarray, p: int) -> int:
    """Multiplicative order of a unipotent matrix over F_p, by repeated p-th powers."""
    rank_sequence(u, p)  # rejects non-unipotent input
    identity = np.eye(u.shape[0], dtype=np.int64)
    power, order = modp.reduce_mod_p(u, p), 1
    while not np.array_equal(power, identity):
        power = modp.power_mod_p(power, p, p)
        order *= p
    return order


def moved_dimension(jordan: JordanType, q: int) -> int:
    """dim (1 - u^q)M for q a power of p, i.e. rank (u - 1)^q, read off the block sizes."""
    return sum(max(size - q, 0) for size in jordan.blocks)


def conjugate_generation_bound(d: int, m: Optional[int] = None, *, rank: Optional[int] = None, f4_involution: bool = False) -> int:
    """Bound on n for an irreducible group generated by conjugates of g, where d = dim (1 - g)V.

    With m conjugates the bound is d * m; for an exceptional group of rank l it
    is d * (l + 3), or 8d for F_4 in even characteristic with g an involution.
    """
    if f4_involution:
        return 8 * d
    if rank is not None:
        return d * (rank + 3)
    if m is None:
        raise errors.ModRepPreconditionError("Either the number of conjugates or the rank is needed")
    return d * m


def dimension_bound(bound: BoundInputs) -> int:
    """(p - 1) p^k (l + 3), or 2^(k + 3) for F_4 with p = 2."""
    if bound.f4_p2_flag:
        return 2 ** (bound.k + 3)
    return conjugate_generation_bound((bound.p - 1) * bound.p**bound.k, rank=bound.l)


def bound_inputs_for_order(order: int, p: int, rank: int, f4_p2_flag: bool = False) -> BoundInputs:
    """BoundInputs for an element of order p^(k+1)."""
    k, power = 0, p
    while power < order:
        power *= p
        k += 1
    if power != order:
        raise errors.ModRepPreconditionError(f"{order} is not a power of {p}")
    return BoundInputs(p=p, k=k, l=rank, f4_p2_flag=f4_p2_flag)
