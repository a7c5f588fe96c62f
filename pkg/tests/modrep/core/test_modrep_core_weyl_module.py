import math

import hypothesis
import hypothesis.strategies as st
import numpy as np
import pytest

from modrep.core import errors
from modrep.core.characters import freudenthal_multiplicities
from modrep.core.root_system import build_root_system
from modrep.core.settings import Settings
from modrep.core.weyl_module import construct_weyl_module
from modrep.core.weyl_module import contravariant_gram
from modrep.core.weyl_module import gram_determinants


def _diagonal(rep, i):
    return np.diag([weight[i] for weight in rep.basis_weights]).astype(object)


class TestWeylModule:
    def test_a1_weights(self, a1):
        # Given When
        result = construct_weyl_module(a1, (4,))

        # Then
        assert result.dim == 5
        assert result.weights == ((4,), (2,), (0,), (-2,), (-4,))
        assert all(dim == 1 for dim in result.weight_dims.values())

    @hypothesis.given(st.integers(0, 9))
    def test_a1_gram_is_binomial(self, a):
        # Given
        rep = construct_weyl_module(build_root_system("A", 1), (a,))

        # When
        result = contravariant_gram(rep)

        # Then
        for k in range(a + 1):
            assert result[(a - 2 * k,)].tolist() == [[math.comb(a, k)]]

    def test_g2_character(self, g2):
        # Given When
        result = construct_weyl_module(g2, (1, 0))

        # Then
        assert result.dim == 7
        assert result.character() == freudenthal_multiplicities(g2, (1, 0))

    @pytest.mark.parametrize("highest, dim", [((0, 1), 14), ((2, 0), 27), ((1, 1), 64)])
    def test_g2_dimensions(self, g2, highest, dim):
        # Given When
        result = construct_weyl_module(g2, highest)

        # Then
        assert result.dim == dim
        assert result.character() == freudenthal_multiplicities(g2, highest)

    def test_commutation_relations(self, g2):
        # Given
        rep = construct_weyl_module(g2, (1, 0))

        # When
        for i in range(2):
            simple = g2.simple_root(i)
            negative = tuple(-c for c in simple)
            e, f = rep.dense((simple, 1)), rep.dense((negative, 1))

            # Then
            assert ((e.dot(f) - f.dot(e)) == _diagonal(rep, i)).all()

    def test_divided_powers_integral(self, a1):
        # Given
        rep = construct_weyl_module(a1, (3,))

        # When
        e = rep.dense(((1,), 1))
        result = rep.dense(((1,), 2))

        # Then
        assert (e.dot(e) == 2 * result).all()
        assert (e.dot(e).dot(e) == 6 * rep.dense(((1,), 3))).all()
        assert ((1,), 4) not in rep.ops

    def test_root_element_is_unipotent(self, g2):
        # Given
        rep = construct_weyl_module(g2, (1, 0))

        # When
        result = rep.root_element((3, 2), 5) - np.identity(rep.dim, dtype=int).astype(object)

        # Then
        power = np.identity(rep.dim, dtype=int).astype(object)
        for _ in range(rep.dim):
            power = power.dot(result)
        assert not power.any()

    def test_root_element_rejects_non_root(self, g2):
        # Given
        rep = construct_weyl_module(g2, (1, 0))

        # Then
        with pytest.raises(errors.ModRepPreconditionError, match="not a root"):
            # When
            rep.root_element((1, 2), 1)

    def test_gram_symmetric(self, g2):
        # Given
        rep = construct_weyl_module(g2, (0, 1))

        # When
        result = contravariant_gram(rep)

        # Then
        assert result[(0, 1)].tolist() == [[1]]
        for matrix in result.values():
            assert (matrix == matrix.T).all()

    def test_gram_copy(self, a1):
        # Given
        rep = construct_weyl_module(a1, (2,))

        # When
        result = contravariant_gram(rep)
        result[(0,)][0, 0] = 99

        # Then
        assert rep.gram[(0,)][0, 0] == 2

    def test_gram_determinants(self, g2):
        # Given
        rep = construct_weyl_module(g2, (1, 0))

        # When
        result = gram_determinants(rep)

        # Then only the zero weight space degenerates, and only mod 2
        assert {weight for weight, det in result.items() if abs(det) != 1} == {(0, 0)}
        assert result[(0, 0)] % 2 == 0
        assert result[(0, 0)] != 0

    def test_size_cap(self, g2):
        # Then
        with pytest.raises(errors.ModRepSizeCapError, match="above the size cap 100"):
            # When
            construct_weyl_module(g2, (2, 1), size_cap=100)

    def test_size_cap_after_cached_build(self, g2, monkeypatch):
        # Given a module already built under the default cap
        assert construct_weyl_module(g2, (1, 1)).dim == 64
        monkeypatch.setattr(Settings, "size_cap", 10)

        # Then
        with pytest.raises(errors.ModRepSizeCapError, match="above the size cap 10"):
            # When
            construct_weyl_module(g2, (1, 1))

        # Then an explicit cap overrides the lowered setting
        assert construct_weyl_module(g2, (1, 1), size_cap=64).dim == 64

    def test_rejects_non_dominant(self, g2):
        # Then
        with pytest.raises(errors.ModRepPreconditionError, match="not dominant"):
            # When
            construct_weyl_module(g2, (-1, 0))
