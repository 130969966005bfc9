"""
Keyed Cache Tests
"""

import threading
import time
from concurrent.futures import ThreadPoolExecutor

from ribbon_invariants.quantum.cache import KeyedCache


def test_builds_once_per_key():
    """Test concurrent requests for one key share a single build"""
    cache: KeyedCache[str, list[int]] = KeyedCache("test")
    calls = []

    def build() -> list[int]:
        calls.append(1)
        time.sleep(0.01)
        return [len(calls)]

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: cache.get_or_build("k", build), range(16)))

    assert len(calls) == 1
    assert all(r is results[0] for r in results)


def test_distinct_keys_build_in_parallel():
    """Test a slow build does not block another key"""
    cache: KeyedCache[str, str] = KeyedCache("test")
    release = threading.Event()

    def slow() -> str:
        release.wait(timeout=5)
        return "slow"

    with ThreadPoolExecutor(max_workers=2) as pool:
        pending = pool.submit(cache.get_or_build, "a", slow)
        assert cache.get_or_build("b", lambda: "fast") == "fast"
        release.set()
        assert pending.result() == "slow"


def test_seed_keeps_existing_value():
    """Test seeding never overwrites a built value"""
    cache: KeyedCache[int, str] = KeyedCache("test")
    cache.get_or_build(1, lambda: "built")
    cache.seed(1, "loaded")
    cache.seed(2, "loaded")

    assert cache.get(1) == "built"
    assert cache.get(2) == "loaded"
    assert 2 in cache
    assert len(cache) == 2


def test_clear():
    """Test clearing forgets every value"""
    cache: KeyedCache[int, int] = KeyedCache("test")
    cache.seed(1, 1)
    cache.clear()

    assert cache.get(1) is None
    assert list(cache.items()) == []
