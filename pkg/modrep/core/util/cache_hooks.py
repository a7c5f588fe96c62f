from __future__ import annotations

import functools
from typing import TYPE_CHECKING, TypedDict, TypeVar

from modrep.core.settings import Settings

if TYPE_CHECKING:
    from collections.abc import Callable
    from collections.abc import Hashable

    T = TypeVar("T", bound=object)
    C = Callable[..., T]

_memory: dict[tuple[str, Hashable], object] = {}


def memory_set(key: tuple[str, Hashable], value: T, /) -> T:
    _memory[key] = value
    while len(_memory) > Settings.cache_size:
        del _memory[next(iter(_memory))]  # least recently used
    return value


def memory_get(key: tuple[str, Hashable]) -> T | None:
    value = _memory.pop(key, None)
    if value is not None:
        _memory[key] = value
    return value  # type: ignore[return-value]


def clear_memory_cache() -> None:
    _memory.clear()


class _OptClass(TypedDict):  # avoid global scope
    disable_cache: bool
    set_cache: Callable[[tuple[str, Hashable], T], T]
    get_cache: Callable[[tuple[str, Hashable]], T | None]
    clear_cache: Callable[[], None]


_Opt: _OptClass = {"disable_cache": False, "set_cache": memory_set, "get_cache": memory_get, "clear_cache": clear_memory_cache}


def setup_cache_hooks(
    set_cache: Callable[[tuple[str, Hashable], T], T],
    get_cache: Callable[[tuple[str, Hashable]], T | None],
    disable_cache: bool = False,
    clear_cache: Callable[[], None] = clear_memory_cache,
) -> None:
    """Replace the in-process cache backend and set options.

    Args:
        set_cache: Function to set value to given key
        get_cache: Function to retrieve value from a given key
        disable_cache: Local disable of cache, for usage by backends
        clear_cache: Function to drop every cached value

    """
    Settings.use_cache = True
    _Opt["disable_cache"] = disable_cache
    _Opt["set_cache"] = set_cache
    _Opt["get_cache"] = get_cache
    _Opt["clear_cache"] = clear_cache


def clear_cache() -> None:
    """Drop cached values through the active backend."""
    _Opt["clear_cache"]()


def cache_result(*, key: str) -> Callable[[C[T]], C[T]]:
    """Memoise a pure function on its (hashable) arguments under namespace `key`."""

    def decorating_function(user_function: C[T]) -> C[T]:
        return _cache_wrapper(user_function, key)

    return decorating_function


def _cache_wrapper(user_function: C[T], key: str) -> C[T]:
    def wrapper(*args: Hashable, **kwargs: Hashable) -> T:
        if Settings.use_cache is False or _Opt["disable_cache"] is True:  # No caching
            return user_function(*args, **kwargs)
        args = tuple(tuple(arg) if isinstance(arg, list) else arg for arg in args)
        key_ = key, (*args, *sorted(kwargs.items()))
        result = _Opt["get_cache"](key_)  # pylint: disable=assignment-from-none  # backends can return None for a miss
        if result is not None:
            return result
        result = user_function(*args, **kwargs)
        _Opt["set_cache"](key_, result)
        return result

    return functools.update_wrapper(wrapper, user_function)
