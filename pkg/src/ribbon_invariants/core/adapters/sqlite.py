"""
SQLite Block Store - Pure storage of braid blocks

Thin wrapper around aiosqlite with no matrix logic.
Uses in-memory or file-based SQLite; the matrix column holds the JSON
matrix schema.
"""

import json
from pathlib import Path

import aiosqlite

from ...domain.models import ModuleRef, StoredBlock


class SQLiteBlockStore:
    """SQLite adapter implementing the BlockStore protocol"""

    def __init__(self, db_path: str | Path = ":memory:"):
        """
        Initialize SQLite block store

        Args:
            db_path: Path to SQLite database file or ":memory:" for in-memory
        """
        self.db_path = str(db_path)
        self.db: aiosqlite.Connection | None = None

    async def initialize(self) -> None:
        """Initialize database schema and connection"""
        # Create parent directory if using file-based storage
        if self.db_path != ":memory:":
            Path(self.db_path).parent.mkdir(parents=True, exist_ok=True)

        self.db = await aiosqlite.connect(self.db_path)
        # Enable WAL mode for concurrent readers
        await self.db.execute("PRAGMA journal_mode = WAL")

        await self._create_schema()

    async def close(self) -> None:
        """Close database connection"""
        if self.db:
            await self.db.close()
            self.db = None

    def _connection(self) -> aiosqlite.Connection:
        if self.db is None:
            raise RuntimeError("block store used before initialize()")
        return self.db

    async def _create_schema(self) -> None:
        """Create database tables"""
        db = self._connection()
        await db.executescript(
            """
            CREATE TABLE IF NOT EXISTS braid_blocks (
                id TEXT PRIMARY KEY,
                algebra TEXT NOT NULL,
                left_module TEXT NOT NULL,
                right_module TEXT NOT NULL,
                inverse INTEGER NOT NULL,
                ledger_hash TEXT NOT NULL,
                matrix TEXT NOT NULL
            );

            CREATE INDEX IF NOT EXISTS idx_blocks_algebra
                ON braid_blocks(algebra, ledger_hash);
            """
        )
        await db.commit()

    # === Helper methods for serialization ===

    @staticmethod
    def _serialize_module(module: ModuleRef) -> str:
        return json.dumps({"highest": list(module.highest), "dual": module.dual})

    @staticmethod
    def _deserialize_module(data: str) -> ModuleRef:
        payload = json.loads(data)
        return ModuleRef(highest=tuple(payload["highest"]), dual=payload["dual"])

    def _row_to_block(self, row: aiosqlite.Row | tuple[object, ...]) -> StoredBlock:
        return StoredBlock(
            algebra=str(row[1]),
            left=self._deserialize_module(str(row[2])),
            right=self._deserialize_module(str(row[3])),
            inverse=bool(row[4]),
            ledger_hash=str(row[5]),
            matrix=json.loads(str(row[6])),
        )

    # === BLOCK CRUD ===

    async def insert_block(self, block: StoredBlock) -> None:
        """Insert or replace block record"""
        db = self._connection()
        await db.execute(
            """
            INSERT OR REPLACE INTO braid_blocks
                (id, algebra, left_module, right_module, inverse, ledger_hash, matrix)
            VALUES (?, ?, ?, ?, ?, ?, ?)
            """,
            (
                block.block_id,
                block.algebra,
                self._serialize_module(block.left),
                self._serialize_module(block.right),
                int(block.inverse),
                block.ledger_hash,
                json.dumps(block.matrix),
            ),
        )
        await db.commit()

    async def get_block(self, block_id: str) -> StoredBlock | None:
        """Get single block by ID"""
        async with self._connection().execute(
            "SELECT * FROM braid_blocks WHERE id = ?", (block_id,)
        ) as cursor:
            row = await cursor.fetchone()
            if not row:
                return None
            return self._row_to_block(row)

    async def get_blocks_by_algebra(self, algebra: str, ledger_hash: str) -> list[StoredBlock]:
        """Get all blocks of one algebra under one ledger"""
        async with self._connection().execute(
            "SELECT * FROM braid_blocks WHERE algebra = ? AND ledger_hash = ? ORDER BY id",
            (algebra, ledger_hash),
        ) as cursor:
            rows = await cursor.fetchall()
            return [self._row_to_block(row) for row in rows]

    async def delete_stale_blocks(self, ledger_hash: str) -> int:
        """Delete blocks whose ledger hash differs"""
        db = self._connection()
        cursor = await db.execute(
            "DELETE FROM braid_blocks WHERE ledger_hash != ?", (ledger_hash,)
        )
        await db.commit()
        return cursor.rowcount
