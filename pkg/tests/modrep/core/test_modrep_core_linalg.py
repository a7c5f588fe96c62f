from fractions import Fraction

import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest

from modrep.core._linalg import modp
from modrep.core._linalg import rational

small_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda size: st.lists(st.lists(st.integers(-6, 6), min_size=size, max_size=size), min_size=size, max_size=size)
)


class TestRational:
    def test_rref(self):
        # Given
        data = np.array([[2, 4, 6], [1, 2, 4]], dtype=object)

        # When
        reduced, pivots = rational.rref(data)

        # Then
        assert pivots == [0, 2]
        assert reduced.tolist() == [[1, 2, 0], [0, 0, 1]]

    def test_inverse(self):
        # Given
        data = np.array([[2, -1], [-3, 2]], dtype=object)  # G2 Cartan matrix

        # When
        result = rational.inverse(data)

        # Then
        assert result.tolist() == [[2, 1], [3, 2]]

    def test_inverse_singular(self):
        # Given
        data = np.array([[1, 2], [2, 4]], dtype=object)

        # Then
        with pytest.raises(ValueError, match="singular"):
            # When
            rational.inverse(data)

    def test_integer_array_rejects_fractions(self):
        # Given
        data = [[Fraction(1, 2), 1]]

        # Then
        with pytest.raises(ValueError, match="non-integral entry 1/2"):
            # When
            rational.integer_array(data)

    def test_hermite_row_basis(self):
        # Given the lattice spanned by (2, 0) and (3, 1), which is the lattice of (1, 1) and (0, 2)
        data = [[2, 0], [3, 1]]

        # When
        result = rational.hermite_row_basis(data, 2)

        # Then
        assert len(result) == 2
        assert abs(result[0][0] * result[1][1] - result[0][1] * result[1][0]) == 2

    def test_lattice_column_basis(self):
        # Given generators 1/2 and 1/3 of a rank-one lattice
        data = np.array([[Fraction(1, 2), Fraction(1, 3)]], dtype=object)

        # When
        result = rational.lattice_column_basis(data)

        # Then
        assert result.shape == (1, 1)
        assert abs(result[0, 0]) == Fraction(1, 6)


class TestModP:
    def test_rank_mod_p(self):
        # Given a matrix of determinant 5
        data = np.array([[1, 2], [-1, 3]])

        # When
        result = {p: modp.rank_mod_p(data, p) for p in (2, 3, 5, 7)}

        # Then
        assert result == {2: 2, 3: 2, 5: 1, 7: 2}

    @hypothesis.given(small_matrices, st.sampled_from([2, 3, 5, 7]))
    def test_rank_nullity(self, rows, p):
        # Given a matrix from hypothesis
        data = np.array(rows, dtype=np.int64)

        # When
        rank = modp.rank_mod_p(data, p)
        kernel = modp.nullspace_mod_p(data, p)

        # Then
        assert rank + kernel.shape[1] == data.shape[1]
        assert not modp.matmul_mod_p(data, kernel, p).any()

    @hypothesis.given(small_matrices, st.sampled_from([3, 5, 7]))
    def test_inverse_mod_p(self, rows, p):
        # Given a matrix from hypothesis
        data = np.array(rows, dtype=np.int64)
        hypothesis.assume(modp.rank_mod_p(data, p) == data.shape[0])

        # When
        result = modp.inverse_mod_p(data, p)

        # Then
        assert np.array_equal(modp.matmul_mod_p(data, result, p), np.eye(data.shape[0], dtype=np.int64))

    def test_reduce_mod_p_python_ints(self):
        # Given entries beyond int64
        data = np.array([[10**30 + 1, -1]], dtype=object)

        # When
        result = modp.reduce_mod_p(data, 5)

        # Then
        assert result.dtype == np.int64
        assert result.tolist() == [[1, 4]]

    def test_power_mod_p(self):
        # Given
        data = np.array([[1, 1], [0, 1]])

        # When
        result = modp.power_mod_p(data, 7, 7)

        # Then
        assert np.array_equal(result, np.eye(2, dtype=np.int64))

    def test_matmul_mod_p_large_prime(self):
        # Given residues whose products overflow int64
        p = 2147483647
        data = np.full((3, 3), p - 1, dtype=np.int64)

        # When
        result = modp.matmul_mod_p(data, data, p)

        # Then (-1)(-1) summed three times
        assert result.dtype == np.int64
        assert np.array_equal(result, np.full((3, 3), 3, dtype=np.int64))

    def test_inverse_mod_p_large_prime(self):
        # Given a unitriangular matrix with entries near p
        p = 2147483647
        size = 12
        upper = np.triu(np.fromfunction(lambda i, j: p - 1 - i - 3 * j, (size, size), dtype=np.int64), k=1)
        data = upper + np.eye(size, dtype=np.int64)

        # When
        result = modp.inverse_mod_p(data, p)

        # Then
        assert np.array_equal(modp.matmul_mod_p(data, result, p), np.eye(size, dtype=np.int64))
        assert np.array_equal(modp.matmul_mod_p(result, data, p), np.eye(size, dtype=np.int64))

    def test_kron_and_scale_large_prime(self):
        # Given
        p = 2147483647
        data = np.array([[p - 1]], dtype=np.int64)

        # When Then
        assert modp.kron_mod_p(data, data, p).tolist() == [[1]]
        assert modp.scale_mod_p(data, p - 2, p).tolist() == [[2]]
