from __future__ import annotations

import numpy as np

_INT64_MAX = 2**63 - 1


def _fits_int64(p: int, terms: int = 1) -> bool:
    """True when `terms` products of residues, plus one residue, stay inside int64."""
    return terms * (p - 1) ** 2 + (p - 1) <= _INT64_MAX


def _working(matrix: np.ndarray, p: int, terms: int = 1) -> np.ndarray:
    return matrix.astype(np.int64) if _fits_int64(p, terms) else matrix.astype(object)


def _stored(matrix: np.ndarray, p: int) -> np.ndarray:
    return np.mod(matrix, p).astype(np.int64)


def reduce_mod_p(matrix: np.ndarray, p: int) -> np.ndarray:
    """Reduce an integer matrix (any dtype, including Python ints) into int64 entries in [0, p)."""
    if p > _INT64_MAX:
        raise ValueError(f"{p} does not fit the int64 storage of F_p matrices")
    array = np.asarray(matrix)
    if array.dtype == object:
        return np.vectorize(lambda value: int(value) % p, otypes=[np.int64])(array) if array.size else array.astype(np.int64)
    return np.mod(array.astype(np.int64), p)


def rref_mod_p(matrix: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p: non-zero rows and pivot columns."""
    work = _working(reduce_mod_p(matrix, p), p)
    rows, cols = work.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(work[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            work[[r, pivot]] = work[[pivot, r]]
        work[r] = (work[r] * pow(int(work[r, c]), -1, p)) % p
        factors = work[:, c].copy()
        factors[r] = 0
        work = (work - np.outer(factors, work[r])) % p
        pivots.append(c)
        r += 1
    return _stored(work[:r], p), pivots


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    if matrix.size == 0:
        return 0
    return len(rref_mod_p(matrix, p)[1])


def nullspace_mod_p(matrix: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning the right kernel of `matrix` over F_p."""
    cols = matrix.shape[1]
    if matrix.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    reduced, pivots = rref_mod_p(matrix, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    kernel = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        kernel[f, j] = 1
        for t, c in enumerate(pivots):
            kernel[c, j] = (-reduced[t, f]) % p
    return kernel


def column_basis_mod_p(matrix: np.ndarray, p: int) -> np.ndarray:
    """Columns forming a basis of the column span of `matrix` over F_p."""
    if matrix.shape[1] == 0:
        return np.zeros((matrix.shape[0], 0), dtype=np.int64)
    return rref_mod_p(matrix.T, p)[0].T.copy()


def matmul_mod_p(left: np.ndarray, right: np.ndarray, p: int) -> np.ndarray:
    terms = max(left.shape[-1], 1)
    return _stored(_working(left, p, terms) @ _working(right, p, terms), p)


def scale_mod_p(matrix: np.ndarray, scalar: int, p: int) -> np.ndarray:
    return _stored(_working(matrix, p) * (scalar % p), p)


def kron_mod_p(left: np.ndarray, right: np.ndarray, p: int) -> np.ndarray:
    return _stored(np.kron(_working(left, p), _working(right, p)), p)


def inverse_mod_p(matrix: np.ndarray, p: int) -> np.ndarray:
    size = matrix.shape[0]
    reduced, pivots = rref_mod_p(np.hstack([reduce_mod_p(matrix, p), np.eye(size, dtype=np.int64)]), p)
    if pivots[:size] != list(range(size)):
        raise ValueError(f"matrix is singular mod {p}")
    return reduced[:, size:].copy()


def power_mod_p(matrix: np.ndarray, exponent: int, p: int) -> np.ndarray:
    result = np.eye(matrix.shape[0], dtype=np.int64)
    base = reduce_mod_p(matrix, p)
    while exponent:
        if exponent & 1:
            result = matmul_mod_p(result, base, p)
        base = matmul_mod_p(base, base, p)
        exponent >>= 1
    return result
