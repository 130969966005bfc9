"""
Keyed Cache - Process-wide memo with per-key construction locks

Same-key builds are serialized so a value is constructed once; builds of
distinct keys proceed in parallel.
"""

import logging
import threading
from collections.abc import Callable, Hashable, Iterator
from typing import Generic, TypeVar

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)
V = TypeVar("V")


class KeyedCache(Generic[K, V]):
    """Thread-safe memo table"""

    def __init__(self, name: str):
        self.name = name
        self._values: dict[K, V] = {}
        self._locks: dict[K, threading.Lock] = {}
        self._guard = threading.Lock()

    def get_or_build(self, key: K, build: Callable[[], V]) -> V:
        value = self._values.get(key)
        if value is not None:
            return value
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            value = self._values.get(key)
            if value is None:
                logger.debug("%s cache miss: %s", self.name, key)
                value = build()
                self._values[key] = value
        return value

    def get(self, key: K) -> V | None:
        return self._values.get(key)

    def seed(self, key: K, value: V) -> None:
        """Insert a value built elsewhere (e.g. loaded from disk) unless present"""
        with self._guard:
            self._values.setdefault(key, value)

    def items(self) -> Iterator[tuple[K, V]]:
        yield from list(self._values.items())

    def __contains__(self, key: object) -> bool:
        return key in self._values

    def __len__(self) -> int:
        return len(self._values)

    def clear(self) -> None:
        with self._guard:
            self._values.clear()
            self._locks.clear()
