"""
Service-specific test fixtures

Provides InvariantService instances with and without an in-memory block store.
"""

import pytest

from ribbon_invariants.core.adapters.sqlite import SQLiteBlockStore
from ribbon_invariants.services.invariant_service import InvariantService


@pytest.fixture
async def block_store():
    """In-memory block store shared with the service under test"""
    store = SQLiteBlockStore(":memory:")
    yield store
    await store.close()


@pytest.fixture
async def service(block_store):
    """Service persisting braid blocks to the in-memory store"""
    service = InvariantService(store=block_store)
    await service.initialize()

    yield service

    await service.close()


@pytest.fixture
async def bare_service():
    """Service without persistence"""
    service = InvariantService()
    await service.initialize()

    yield service

    await service.close()
