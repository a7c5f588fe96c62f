from __future__ import annotations

from typing import TYPE_CHECKING

import hypothesis
import hypothesis.strategies as st
import pytest

from modrep.core import errors
from modrep.core.settings import Settings
from modrep.core.util import cache_hooks
from modrep.core.util import context_managers
from modrep.core.util import type_coercion

if TYPE_CHECKING:
    import pathlib


class TestUtility:
    def test_maybe_int_int(self):
        # Given
        data = 123

        # When
        result = type_coercion.maybe_int(data)
        result_str = type_coercion.maybe_int(str(data))

        # Then
        assert result == data
        assert result_str == data

    def test_maybe_int_str(self):
        # Given
        data = "abc"

        # When
        result = type_coercion.maybe_int(data)

        # Then
        assert result is None

    def test_parse_int_list(self):
        # Given
        data = "1,0,0,1"

        # When
        result = type_coercion.parse_int_list(data)

        # Then
        assert result == (1, 0, 0, 1)

    def test_parse_int_list_invalid(self):
        # Given
        data = "1,x"

        # Then
        with pytest.raises(ValueError, match="not a comma separated list of integers"):
            # When
            type_coercion.parse_int_list(data)

    @hypothesis.given(st.lists(st.integers(min_value=-1000, max_value=1000), min_size=1, max_size=8))
    def test_parse_int_list_any(self, data):
        # Given data from hypothesis, When
        result = type_coercion.parse_int_list(",".join(map(str, data)))

        # Then
        assert result == tuple(data)

    def test_parse_lie_type(self):
        # Given
        data = ["F4", "g2", "E_8", " A1 "]

        # When
        result = [type_coercion.parse_lie_type(label) for label in data]

        # Then
        assert result == [("F", 4), ("G", 2), ("E", 8), ("A", 1)]

    def test_parse_lie_type_invalid(self):
        # Given
        data = "H3"

        # Then
        with pytest.raises(ValueError, match="not a Cartan type label"):
            # When
            type_coercion.parse_lie_type(data)

    def test_is_prime(self):
        # Given
        data = range(30)

        # When
        result = [n for n in data if type_coercion.is_prime(n)]

        # Then
        assert result == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_filesystem_guard_file(self, tmp_path: pathlib.Path):
        # Given some file (with text)
        filename = tmp_path / "existent.txt"
        test_text = "test-text"
        filename.write_text(test_text, encoding="utf-8")

        # When we read the file with filesystem_guard
        with context_managers.filesystem_guard("message (test_filesystem_guard_file)"):
            out = filename.read_text(encoding="utf-8")

        # Then check filesystem_guard hasn't mutated the text
        assert test_text == out

    def test_filesystem_guard_no_file(self, tmp_path: pathlib.Path, caplog: pytest.LogCaptureFixture):
        # Given some file (doesn't exist)
        filename = tmp_path / "non-existent.txt"

        # When we read the file with filesystem_guard
        with pytest.raises(FileNotFoundError):
            with context_managers.filesystem_guard("message (test_filesystem_guard_no_file)"):
                filename.read_text(encoding="utf-8")

        # Then check filesystem_guard has logged the error with the custom message
        assert "message (test_filesystem_guard_no_file)" in caplog.text

    def test_invariant_guard_strict(self, caplog: pytest.LogCaptureFixture):
        # Given
        Settings.strict_checks = True

        # Then
        with pytest.raises(errors.ModRepInvariantError):
            # When
            with context_managers.invariant_guard("strict context"):
                raise errors.ModRepInvariantError("broken")
        assert "strict context" in caplog.text

    def test_invariant_guard_lenient(self, caplog: pytest.LogCaptureFixture):
        # Given
        Settings.strict_checks = False

        # When
        try:
            with context_managers.invariant_guard("lenient context"):
                raise errors.ModRepInvariantError("broken")
        finally:
            Settings.strict_checks = True

        # Then
        assert "lenient context" in caplog.text
        assert "Traceback" in caplog.text

    def test_invariant_guard_ignores_preconditions(self):
        # Given
        Settings.strict_checks = False

        # Then
        try:
            with pytest.raises(errors.ModRepPreconditionError):
                # When
                with context_managers.invariant_guard("context"):
                    raise errors.ModRepPreconditionError("bad input")
        finally:
            Settings.strict_checks = True


class TestCacheHooks:
    def test_cache_result_memoises(self, cold_cache):
        # Given
        calls = []

        @cache_hooks.cache_result(key="test_memoises")
        def square(x):
            calls.append(x)
            return x * x

        # When
        result = [square(3), square(3), square(4)]

        # Then
        assert result == [9, 9, 16]
        assert calls == [3, 4]

    def test_cache_result_lists_as_tuples(self, cold_cache):
        # Given
        @cache_hooks.cache_result(key="test_lists")
        def total(values):
            return sum(values)

        # When
        first = total([1, 2, 3])
        second = total((1, 2, 3))

        # Then
        assert first == second == 6
        assert cache_hooks.memory_get(("test_lists", ((1, 2, 3),))) == 6

    def test_cache_disabled(self, cold_cache):
        # Given
        calls = []

        @cache_hooks.cache_result(key="test_disabled")
        def identity(x):
            calls.append(x)
            return x

        # When
        Settings.use_cache = False
        try:
            identity(1)
            identity(1)
        finally:
            Settings.use_cache = True

        # Then
        assert calls == [1, 1]

    def test_setup_cache_hooks(self, cold_cache):
        # Given
        store = {}

        def set_cache(key, value, /):
            store[key] = value
            return value

        @cache_hooks.cache_result(key="test_hooks")
        def double(x):
            return 2 * x

        # When
        cache_hooks.setup_cache_hooks(set_cache, store.get)
        try:
            result = double(21)
        finally:
            cache_hooks.setup_cache_hooks(cache_hooks.memory_set, cache_hooks.memory_get)

        # Then
        assert result == 42
        assert store == {("test_hooks", (21,)): 42}

    def test_memory_cache_is_bounded(self, cold_cache, monkeypatch):
        # Given
        monkeypatch.setattr(Settings, "cache_size", 2)

        @cache_hooks.cache_result(key="test_bounded")
        def negate(x):
            return -x

        # When
        negate(1)
        negate(2)
        negate(1)  # refreshes 1
        negate(3)

        # Then the least recently used entry is evicted
        assert cache_hooks.memory_get(("test_bounded", (2,))) is None
        assert cache_hooks.memory_get(("test_bounded", (1,))) == -1
        assert cache_hooks.memory_get(("test_bounded", (3,))) == -3

    def test_clear_cache_uses_hook(self, cold_cache):
        # Given
        cleared = []
        cache_hooks.setup_cache_hooks(cache_hooks.memory_set, cache_hooks.memory_get, clear_cache=lambda: cleared.append(True))

        # When
        try:
            cache_hooks.clear_cache()
        finally:
            cache_hooks.setup_cache_hooks(cache_hooks.memory_set, cache_hooks.memory_get)

        # Then
        assert cleared == [True]

    def test_clear_cache_default(self, cold_cache):
        # Given
        cache_hooks.memory_set(("test_clear", (1,)), 1)

        # When
        cache_hooks.clear_cache()

        # Then
        assert cache_hooks.memory_get(("test_clear", (1,))) is None
