import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    # keep table caching hermetic per test
    monkeypatch.setenv("XXRX_CACHE_DIR", str(tmp_path / "cache"))
