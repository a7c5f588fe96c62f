from __future__ import annotations

from fractions import Fraction
import math
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence


def fraction_array(rows: Iterable[Iterable[object]] | np.ndarray) -> np.ndarray:
    """Exact copy of a 2-d array with Fraction entries."""
    array = np.array(rows, dtype=object)
    if array.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {array.shape}")
    if array.size == 0:
        return array
    return np.vectorize(Fraction, otypes=[object])(array)


def integer_array(rows: Iterable[Iterable[object]] | np.ndarray) -> np.ndarray:
    """Convert a matrix of integral Fractions to Python ints; raises ValueError on a fractional entry."""
    array = np.array(rows, dtype=object)
    out = np.empty(array.shape, dtype=object)
    for index, value in np.ndenumerate(array):
        value = Fraction(value)
        if value.denominator != 1:
            raise ValueError(f"non-integral entry {value} at {index}")
        out[index] = value.numerator
    return out


def is_integral(matrix: np.ndarray) -> bool:
    return all(Fraction(value).denominator == 1 for value in matrix.flat)


def zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(Fraction(0))
    return out


def identity(size: int) -> np.ndarray:
    out = zeros(size, size)
    for i in range(size):
        out[i, i] = Fraction(1)
    return out


def rref(matrix: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over Q.

    Returns the non-zero rows of the reduced matrix and the pivot columns.
    Pivoting takes the first non-zero entry, so results are deterministic.
    """
    work = fraction_array(matrix)
    rows, cols = work.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(work[r:, c] != 0)[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            work[[r, pivot]] = work[[pivot, r]]
        work[r] = work[r] / work[r, c]
        factors = work[:, c].copy()
        factors[r] = Fraction(0)
        work = work - np.outer(factors, work[r])
        pivots.append(c)
        r += 1
    return work[:r], pivots


def inverse(matrix: np.ndarray) -> np.ndarray:
    size = matrix.shape[0]
    if matrix.shape != (size, size):
        raise ValueError(f"inverse of a non-square matrix {matrix.shape}")
    reduced, pivots = rref(np.hstack([fraction_array(matrix), identity(size)]))
    if pivots[:size] != list(range(size)):
        raise ValueError("singular matrix")
    return reduced[:, size:]


def hermite_row_basis(rows: Sequence[Sequence[int]], width: int) -> list[list[int]]:
    """Row basis in echelon form of the Z-lattice spanned by integer rows."""
    work = [list(row) for row in rows if any(row)]
    basis: list[list[int]] = []
    for c in range(width):
        active = [row for row in work if row[c] != 0]
        rest = [row for row in work if row[c] == 0]
        while len(active) > 1:
            active.sort(key=lambda row: abs(row[c]))
            pivot = active[0]
            reduced = [pivot]
            for row in active[1:]:
                quotient = row[c] // pivot[c]
                row = [x - quotient * y for x, y in zip(row, pivot)]
                if row[c] != 0:
                    reduced.append(row)
                elif any(row):
                    rest.append(row)
            active = reduced
        if active:
            pivot = active[0]
            if pivot[c] < 0:
                pivot = [-x for x in pivot]
            basis.append(pivot)
        work = rest
    return basis


def lattice_column_basis(generators: np.ndarray) -> np.ndarray:
    """Column basis of the Z-lattice spanned by the rational columns of `generators`."""
    height = generators.shape[0]
    columns = [[Fraction(x) for x in generators[:, j]] for j in range(generators.shape[1])]
    denominator = 1
    for column in columns:
        for value in column:
            denominator = denominator * value.denominator // math.gcd(denominator, value.denominator)
    scaled = [[int(value * denominator) for value in column] for column in columns]
    basis = hermite_row_basis(scaled, height)
    out = zeros(height, len(basis))
    for j, row in enumerate(basis):
        for i, value in enumerate(row):
            out[i, j] = Fraction(value, denominator)
    return out
