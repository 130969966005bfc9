"""
Factory Functions - Instantiate adapters based on configuration
"""

from ..domain.protocols import BlockStore
from ..settings.config import Config


def get_block_store(config: Config | None = None) -> BlockStore | None:
    """Factory for the block store

    Returns:
        SQLiteBlockStore under the configured cache directory, or None when
        persistence is disabled
    """
    cfg = config or Config.from_env()

    if cfg.cache_path is None:
        return None

    from .adapters.sqlite import SQLiteBlockStore

    return SQLiteBlockStore(db_path=cfg.cache_path)


async def initialize_store(store: BlockStore) -> None:
    """Initialize block store (creates schema/connections)"""
    await store.initialize()


async def close_store(store: BlockStore) -> None:
    """Cleanup block store"""
    await store.close()
