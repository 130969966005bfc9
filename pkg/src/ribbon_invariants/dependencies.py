"""
Dependency Injection for Commands

Provides shared instances of the configuration and the service for command
handlers to use.
"""

from .core.factories import get_block_store
from .services.invariant_service import InvariantService
from .settings.config import Config

# Global service instance (initialized on first use)
_service: InvariantService | None = None
_config: Config | None = None


def get_config() -> Config:
    """Get configuration singleton."""
    global _config
    if _config is None:
        _config = Config.from_env()
    return _config


async def get_service() -> InvariantService:
    """Get or initialize the service instance."""
    global _service
    if _service is None:
        store = get_block_store(get_config())
        _service = InvariantService(store=store)
        await _service.initialize()
    return _service


async def shutdown_service() -> None:
    """Close the service and forget it"""
    global _service
    if _service is not None:
        await _service.close()
        _service = None


def set_config(config: Config) -> None:
    """Install a configuration with command-line overrides applied"""
    global _config
    _config = config
