import pytest

from modrep.core.schemas.jordan import JordanType
from modrep.core.schemas.records import ModuleHeader
from modrep.core.settings import Settings
from modrep.core.util import serialization
from modrep.core.weyl_module import construct_weyl_module


class TestModuleTable:
    def test_integral_header(self, a1):
        # Given
        rep = construct_weyl_module(a1, (2,))

        # When
        result = serialization.module_table(rep).splitlines()

        # Then
        assert result[0] == "A 1 2 integral 3"
        assert result[1:4] == ["2", "0", "-2"]
        assert result[4].startswith("op -1 1 ")

    def test_modular_table_parses(self, g2_minimal_heads):
        # Given
        module = g2_minimal_heads[2]

        # When
        header, weights, operators = serialization.read_module_table(serialization.module_table(module))

        # Then
        assert header == ModuleHeader(lie_type="G", rank=2, highest=(1, 0), p=2, dim=6)
        assert weights == list(module.basis_weights)
        assert set(operators) == set(module.ops)
        for key, entries in operators.items():
            assert len(entries) == int(module.ops[key].astype(bool).sum())
            assert all(module.ops[key][row, col] == value for row, col, value in entries)

    def test_dump_module(self, tmp_path, caplog, g2_minimal_heads):
        # Given
        path = tmp_path / "head.txt"

        # When
        with caplog.at_level("INFO", logger="modrep"):
            result = serialization.dump_module(g2_minimal_heads[3], path)

        # Then
        assert result == path
        assert path.read_text(encoding="utf-8").startswith("G 2 1,0 3 7\n")
        assert "written to" in caplog.text

    def test_dump_module_missing_directory(self, tmp_path, caplog, g2_minimal_heads):
        # Given
        path = tmp_path / "missing" / "head.txt"

        # Then
        with pytest.raises(FileNotFoundError):
            # When
            serialization.dump_module(g2_minimal_heads[3], path)
        assert "Unable to write module dump" in caplog.text


class TestRecords:
    def test_records_stream(self):
        # Given
        data = [JordanType(blocks=(3, 1)), JordanType(blocks=(2, 2))]

        # When
        result = serialization.records_stream("tensor", data)

        # Then
        assert result.splitlines()[0] == f"# modrep-records schema={Settings.records_schema_version} command=tensor"
        assert serialization.read_records(result) == (Settings.records_schema_version, [{"blocks": [3, 1]}, {"blocks": [2, 2]}])

    def test_read_records_rejects_plain_text(self):
        # Then
        with pytest.raises(ValueError, match="not a record stream"):
            # When
            serialization.read_records("3,1\n")
