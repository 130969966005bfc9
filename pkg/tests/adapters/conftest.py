"""
Adapter-specific test fixtures

Provides SQLite block stores, in memory and on disk, plus the block factory.
"""

import pytest

from ribbon_invariants.core.adapters.sqlite import SQLiteBlockStore
from tests.conftest import StoredBlockFactory


@pytest.fixture
async def sqlite_block_store():
    """
    Provides an in-memory SQLite block store with automatic cleanup

    Uses :memory: database so no filesystem cleanup needed.
    """
    store = SQLiteBlockStore(":memory:")
    await store.initialize()

    yield store

    await store.close()


@pytest.fixture
async def sqlite_file_block_store(tmp_path):
    """Provides a file-based SQLite block store under a nested directory"""
    store = SQLiteBlockStore(tmp_path / "cache" / "blocks.db")
    await store.initialize()

    yield store

    await store.close()


@pytest.fixture
def block_factory():
    return StoredBlockFactory
