"""
Settings and Configuration
"""

from .config import Config, OutputFormat

__all__ = ["Config", "OutputFormat"]
