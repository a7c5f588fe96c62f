import itertools

import pytest

from modrep.core import errors
from modrep.core import levels
from modrep.core.characters import freudenthal_multiplicities
from modrep.core.modular import modular_weight_multiplicities
from modrep.core.root_system import build_root_system
from modrep.core.unipotent import g2_head


class TestLevelDecomposition:
    def test_two_omega_1(self, g2):
        # Given
        source = freudenthal_multiplicities(g2, (2, 0))

        # When
        result = levels.level_decomposition(source, 1)

        # Then
        assert result.levi_nodes == (0,)
        assert result.level(0) == {(2,): 1, (0,): 1}
        assert result.level(1) == {(3,): 1, (1,): 2}
        assert result.total_dim == result.source_dim == 27
        assert result.p is None

    def test_levels_ordered_by_depth(self, g2):
        # Given
        source = freudenthal_multiplicities(g2, (2, 0))

        # When
        result = levels.level_decomposition(source, 1)

        # Then
        assert [entry.weight for entry in result.levels[1]] == [(3,), (1,)]
        assert [entry.orbit_size for entry in result.levels[1]] == [2, 2]

    def test_two_omega_2_mod_5(self):
        # Given
        source = modular_weight_multiplicities(g2_head((0, 2), 5))

        # When
        result = levels.level_decomposition(source, 0, p=5)

        # Then
        assert result.p == 5
        assert result.level(3) == {(3,): 1, (1,): 3}
        assert result.total_dim == source.dim

    @pytest.mark.parametrize("highest", list(itertools.product(range(3), repeat=2)))
    @pytest.mark.parametrize("node", [0, 1])
    def test_levels_account_for_dimension(self, g2, highest, node):
        # Given
        source = freudenthal_multiplicities(g2, highest)

        # When
        result = levels.level_decomposition(source, node)

        # Then
        assert result.total_dim == source.dim
        assert result.level(0)[levels.smith_top_factor(g2, highest, result.levi_nodes)] == 1

    def test_f4_minimal_module(self):
        # Given
        f4 = build_root_system("F", 4)
        source = freudenthal_multiplicities(f4, (0, 0, 0, 1))

        # When
        result = levels.level_decomposition(source, 0)

        # Then the Levi is C3 and level 0 is headed by the restriction of omega_4
        assert result.levi_nodes == (1, 2, 3)
        assert result.level(0)[(0, 0, 1)] == 1
        assert result.total_dim == 26

    def test_gs_warning(self, g2):
        # Given When
        flagged = levels.level_decomposition(freudenthal_multiplicities(g2, (0, 1)), 0, p=3)
        plain = levels.level_decomposition(freudenthal_multiplicities(g2, (2, 0)), 0, p=3)
        other_prime = levels.level_decomposition(freudenthal_multiplicities(g2, (0, 1)), 0, p=5)

        # Then
        assert flagged.gs_warning is True
        assert plain.gs_warning is False
        assert other_prime.gs_warning is False

    @pytest.mark.parametrize("highest, image", [((1, 0), (0, 1)), ((0, 0), (0, 0))])
    def test_special_isogeny_transport(self, highest, image):
        # Given
        source = levels.level_decomposition(modular_weight_multiplicities(g2_head(highest, 3)), 1, p=3)

        # When the isogeny sends omega_1 to omega_2 and alpha_2 to 3 alpha_1
        result = levels.level_decomposition(modular_weight_multiplicities(g2_head(image, 3)), 0, p=3)

        # Then levels scale by 3 with the same Levi weights
        assert len(result.levels) == 3 * len(source.levels) - 2
        for d in range(len(result.levels)):
            assert result.level(d) == (source.level(d // 3) if d % 3 == 0 else {})

    def test_rejects_node(self, g2):
        # Then
        with pytest.raises(errors.ModRepPreconditionError, match="Node 2 out of range"):
            # When
            levels.level_decomposition(freudenthal_multiplicities(g2, (1, 0)), 2)


class TestCandidates:
    def test_two_omega_1(self, g2):
        # Given
        report = levels.level_decomposition(freudenthal_multiplicities(g2, (2, 0)), 1)

        # When
        result = levels.candidate_factor_report(report, 1)

        # Then
        assert [(c.weight, c.raw_multiplicity, c.count) for c in result] == [((3,), 1, 1), ((1,), 2, 1)]
        assert all(c.characteristic_zero for c in result)

    def test_two_omega_2_mod_5(self):
        # Given
        report = levels.level_decomposition(modular_weight_multiplicities(g2_head((0, 2), 5)), 0, p=5)

        # When
        result = levels.candidate_factor_report(report, 3)

        # Then the weight 1 has multiplicity 3 but heads two factors
        assert {c.weight: c.count for c in result} == {(3,): 1, (1,): 2}
        assert {c.weight: c.multiple for c in result} == {(3,): False, (1,): True}
        assert not any(c.characteristic_zero for c in result)

    def test_four_omega_2_top(self, g2):
        # Given
        report = levels.level_decomposition(freudenthal_multiplicities(g2, (0, 4)), 1, p=5)

        # When
        result = levels.candidate_factor_report(report, 3)

        # Then 9 = 4 + 1 * 5 so the top Levi factor has dimension 5 * 2
        assert (result[0].weight, result[0].levi_dim) == ((9,), 10)

    def test_three_omega_2(self, g2):
        # Given
        report = levels.level_decomposition(freudenthal_multiplicities(g2, (0, 3)), 0, p=5)

        # When
        result = {c.weight: c.count for c in levels.candidate_factor_report(report, 3)}

        # Then
        assert result[(4,)] == 1
        assert result[(2,)] >= 1

    @pytest.mark.slow
    def test_three_omega_2_modular_census(self):
        # Given the irreducible head, above the default cap
        head = g2_head((0, 3), 5, size_cap=300)
        report = levels.level_decomposition(modular_weight_multiplicities(head), 0, p=5)

        # When
        result = {c.weight: c.count for c in levels.candidate_factor_report(report, 3)}

        # Then
        assert head.dim == 196
        assert report.level(3) == {(4,): 1, (2,): 3, (0,): 3}
        assert result == {(4,): 1, (2,): 2}

    def test_explicit_prime_overrides_report(self, g2):
        # Given
        report = levels.level_decomposition(freudenthal_multiplicities(g2, (0, 4)), 1)

        # When
        char0 = levels.candidate_factor_report(report, 3)
        mod5 = levels.candidate_factor_report(report, 3, p=5)

        # Then
        assert char0[0].levi_dim == 10
        assert char0[0].characteristic_zero
        assert not mod5[0].characteristic_zero

    def test_rejects_level(self, g2):
        # Given
        report = levels.level_decomposition(freudenthal_multiplicities(g2, (1, 0)), 1)

        # Then
        with pytest.raises(errors.ModRepPreconditionError, match="Level 9 out of range"):
            # When
            levels.candidate_factor_report(report, 9)


class TestLabels:
    def test_smith_top_factor(self, g2):
        # Given When
        result = levels.smith_top_factor(g2, (3, 4), (1,))

        # Then
        assert result == (4,)

    def test_reverse_levi_labels(self):
        # Given When
        result = levels.reverse_levi_labels((1, 2, 3))

        # Then
        assert result == (3, 2, 1)
