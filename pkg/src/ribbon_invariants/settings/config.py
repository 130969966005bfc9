"""
Configuration - Load settings from environment

Command-line flags override these values; the algebra string is kept raw
here and parsed into a LieType by the command before any computation.
"""

import logging
import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from dotenv import load_dotenv

from ..domain.models import RibbonChoice

# Load .env file if present
load_dotenv()


class OutputFormat(str, Enum):
    """Result rendering options"""

    TEXT = "text"
    JSON = "json"


@dataclass
class Config:
    """Engine configuration"""

    # Default algebra for commands that take one
    algebra: str = "A1"

    # Ribbon element for twists and quantum traces
    ribbon: RibbonChoice = RibbonChoice.SNYDER_TINGLEY

    output: OutputFormat = OutputFormat.TEXT

    # Optional on-disk braid block cache (disabled when unset)
    cache_dir: Path | None = None

    log_level: str = "WARNING"

    def __post_init__(self) -> None:
        if not isinstance(logging.getLevelName(self.log_level), int):
            raise ValueError(f"unknown log level '{self.log_level}'")

    @property
    def cache_path(self) -> Path | None:
        """SQLite file inside the cache directory"""
        return self.cache_dir / "blocks.db" if self.cache_dir else None

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from environment variables"""
        cache_dir = os.getenv("RIBBON_INVARIANTS_CACHE_DIR", "")
        return cls(
            algebra=os.getenv("RIBBON_ALGEBRA", "A1"),
            ribbon=RibbonChoice(os.getenv("RIBBON_CHOICE", RibbonChoice.SNYDER_TINGLEY.value)),
            output=OutputFormat(os.getenv("RIBBON_OUTPUT", OutputFormat.TEXT.value)),
            cache_dir=Path(cache_dir) if cache_dir else None,
            log_level=os.getenv("RIBBON_LOG_LEVEL", "WARNING").upper(),
        )
