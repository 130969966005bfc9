"""
Core Infrastructure - Factories and storage adapters
"""

from .factories import close_store, get_block_store, initialize_store

__all__ = [
    "get_block_store",
    "initialize_store",
    "close_store",
]
