"""
Block Store Protocol - Persistence for computed braid blocks

Adapters only store and fetch records; building and validating blocks stays
in the quantum layer.
"""

from typing import Protocol, runtime_checkable

from .models import StoredBlock


@runtime_checkable
class BlockStore(Protocol):
    """
    Plain key-value interface over StoredBlock records.

    NO matrix arithmetic. NO convention checks beyond the ledger hash key.
    """

    async def initialize(self) -> None:
        """Create schema and open connections"""
        ...

    async def close(self) -> None:
        """Cleanup connections"""
        ...

    async def insert_block(self, block: StoredBlock) -> None:
        """Insert or replace one block"""
        ...

    async def get_block(self, block_id: str) -> StoredBlock | None:
        """Get a single block by its id"""
        ...

    async def get_blocks_by_algebra(self, algebra: str, ledger_hash: str) -> list[StoredBlock]:
        """All blocks of one algebra built under one convention ledger"""
        ...

    async def delete_stale_blocks(self, ledger_hash: str) -> int:
        """Delete blocks built under any other ledger; returns the number removed"""
        ...
