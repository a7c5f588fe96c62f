import pytest

from modrep.core import characters
from modrep.core import errors
from modrep.core.characters import freudenthal_multiplicities
from modrep.core.characters import weyl_dimension
from modrep.core.root_system import build_root_system
from modrep.core.root_system import weight_grid


class TestFreudenthal:
    def test_g2_minimal(self, g2):
        # Given When
        result = freudenthal_multiplicities(g2, (1, 0))

        # Then
        assert result.entries == {(1, 0): 1, (0, 0): 1}
        assert result.dim == 7

    def test_g2_adjoint(self, g2):
        # Given When
        result = freudenthal_multiplicities(g2, (0, 1))

        # Then the zero weight space is the Cartan subalgebra
        assert result.entries == {(0, 1): 1, (1, 0): 1, (0, 0): 2}
        assert result.dim == 14
        assert result.nonzero_multiplicity_free()

    def test_g2_two_omega_1(self, g2):
        # Given When
        result = freudenthal_multiplicities(g2, (2, 0))

        # Then
        assert result.entries == {(2, 0): 1, (0, 1): 1, (1, 0): 2, (0, 0): 3}
        assert result.dim == 27
        assert not result.nonzero_multiplicity_free()

    def test_a2_adjoint(self):
        # Given
        datum = build_root_system("A", 2)

        # When
        result = freudenthal_multiplicities(datum, (1, 1))

        # Then
        assert result.entries == {(1, 1): 1, (0, 0): 2}
        assert result.dim == 8

    def test_mult_of_non_dominant_weight(self, g2):
        # Given
        table = freudenthal_multiplicities(g2, (2, 0))

        # When
        result = [table.mult(weight) for weight in [(-1, 0), (2, -1), (-2, 1), (5, 5)]]

        # Then
        assert result == [2, 2, 2, 0]

    def test_full_weights(self, g2):
        # Given
        table = freudenthal_multiplicities(g2, (1, 0))

        # When
        result = table.weights()

        # Then
        assert sum(result.values()) == 7
        assert result[(-1, 0)] == 1
        assert result[(0, 0)] == 1

    def test_dominant_items_order(self, g2):
        # Given
        table = freudenthal_multiplicities(g2, (2, 0))

        # When
        result = [weight for weight, _ in table.dominant_items()]

        # Then
        assert result == [(2, 0), (0, 1), (1, 0), (0, 0)]

    @pytest.mark.parametrize("lie_type, rank, bound", [("A", 2, 3), ("B", 3, 1), ("C", 3, 1), ("G", 2, 3), ("D", 4, 1)])
    def test_dimension_agrees_with_weyl(self, lie_type, rank, bound):
        # Given
        datum = build_root_system(lie_type, rank)

        # When
        weights = list(weight_grid(datum, bound))

        # Then
        for weight in weights:
            assert freudenthal_multiplicities(datum, weight).dim == weyl_dimension(datum, weight), weight

    def test_rejects_non_dominant(self, g2):
        # Then
        with pytest.raises(errors.ModRepPreconditionError, match="not dominant"):
            # When
            freudenthal_multiplicities(g2, (1, -1))

    def test_rejects_wrong_rank(self, g2):
        # Then
        with pytest.raises(errors.ModRepPreconditionError, match="has 3 coordinates"):
            # When
            freudenthal_multiplicities(g2, (1, 0, 0))


class TestWeylDimension:
    @pytest.mark.parametrize(
        "highest, expected",
        [((1, 0), 7), ((0, 1), 14), ((2, 0), 27), ((1, 1), 64), ((3, 0), 77), ((0, 2), 77), ((4, 0), 182), ((2, 1), 189)],
    )
    def test_g2(self, g2, highest, expected):
        # Given When
        result = weyl_dimension(g2, highest)

        # Then
        assert result == expected

    @pytest.mark.parametrize(
        "lie_type, rank, highest, expected",
        [
            ("A", 1, (6,), 7),
            ("B", 2, (1, 0), 5),
            ("B", 2, (0, 1), 4),
            ("F", 4, (1, 0, 0, 0), 52),
            ("F", 4, (0, 0, 0, 1), 26),
            ("F", 4, (0, 0, 1, 0), 273),
            ("F", 4, (1, 0, 0, 1), 1053),
            ("E", 6, (1, 0, 0, 0, 0, 0), 27),
            ("E", 6, (0, 1, 0, 0, 0, 0), 78),
            ("E", 7, (0, 0, 0, 0, 0, 0, 1), 56),
            ("E", 7, (1, 0, 0, 0, 0, 0, 0), 133),
            ("E", 8, (0, 0, 0, 0, 0, 0, 0, 1), 248),
        ],
    )
    def test_known_dimensions(self, lie_type, rank, highest, expected):
        # Given
        datum = build_root_system(lie_type, rank)

        # When
        result = weyl_dimension(datum, highest)

        # Then
        assert result == expected

    def test_trivial(self, g2):
        # Given When
        result = weyl_dimension(g2, (0, 0))

        # Then
        assert result == 1

    def test_weights_under_dimension_g2(self, g2):
        # Given When
        result = characters.weights_under_dimension(g2, 200)

        # Then
        assert result == [
            ((0, 0), 1),
            ((1, 0), 7),
            ((0, 1), 14),
            ((2, 0), 27),
            ((1, 1), 64),
            ((0, 2), 77),
            ((3, 0), 77),
            ((4, 0), 182),
            ((2, 1), 189),
        ]

    def test_weights_under_dimension_f4(self):
        # Given When
        result = characters.weights_under_dimension(build_root_system("F", 4), 200)

        # Then
        assert result == [((0, 0, 0, 0), 1), ((0, 0, 0, 1), 26), ((1, 0, 0, 0), 52)]


class TestMultiplicityFree:
    def test_g2_scan(self, g2):
        # Given When
        result = characters.scan_multiplicity_free(g2, 1)

        # Then
        assert result == [((0, 1), 14), ((1, 0), 7)]

    def test_fundamentals_only(self):
        # Given
        datum = build_root_system("F", 4)

        # When
        result = characters.scan_multiplicity_free(datum, 1, fundamentals_only=True)

        # Then
        assert result == [((1, 0, 0, 0), 52), ((0, 0, 0, 1), 26)]

    def test_e8_adjoint(self):
        # Given
        datum = build_root_system("E", 8)

        # When
        result = characters.is_nonzero_multiplicity_free(datum, (0, 0, 0, 0, 0, 0, 0, 1))

        # Then
        assert result is True

    def test_rejects_bound(self, g2):
        # Then
        with pytest.raises(errors.ModRepPreconditionError, match="at least 1"):
            # When
            characters.scan_multiplicity_free(g2, 0)


class TestCharacterFromWeights:
    def test_collects_census(self, g2):
        # Given
        census = freudenthal_multiplicities(g2, (0, 1)).weights()

        # When
        result = characters.character_from_weights(g2, census)

        # Then
        assert result.highest == (0, 1)
        assert result == freudenthal_multiplicities(g2, (0, 1))

    def test_rejects_non_invariant_census(self, a1):
        # Given
        census = {(1,): 1, (-1,): 2}

        # Then
        with pytest.raises(errors.ModRepInvariantError, match="not W-invariant"):
            # When
            characters.character_from_weights(a1, census)
