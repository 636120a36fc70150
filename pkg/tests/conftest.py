import pytest

from wittkit.universal import PolySource, set_default_source


@pytest.fixture(scope="session", autouse=True)
def memory_only_cache():
    # hermetic runs: keep the universal-polynomial memo in memory, shared
    # across the whole session so later tests reuse earlier computations
    set_default_source(PolySource(cache_path=None))
    yield
    set_default_source(None)
