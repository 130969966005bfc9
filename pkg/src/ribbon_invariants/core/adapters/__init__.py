"""
Storage Adapters

Persistence for computed braid blocks.
"""
