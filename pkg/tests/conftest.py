import hypothesis
import pytest

from modrep.core.root_system import build_root_system
from modrep.core.root_system import RootDatum
from modrep.core.unipotent import g2_head
from modrep.core.util.cache_hooks import clear_memory_cache

hypothesis.settings.register_profile("modrep", deadline=None, max_examples=50)
hypothesis.settings.load_profile("modrep")


@pytest.fixture(scope="session")
def a1() -> RootDatum:
    return build_root_system("A", 1)


@pytest.fixture(scope="session")
def g2() -> RootDatum:
    return build_root_system("G", 2)


@pytest.fixture(scope="session")
def g2_minimal_heads():
    """L(omega_1) over F_p for the primes the G2 suite uses."""
    return {p: g2_head((1, 0), p) for p in (2, 3, 5, 7)}


@pytest.fixture()
def cold_cache():
    clear_memory_cache()
    yield
    clear_memory_cache()
