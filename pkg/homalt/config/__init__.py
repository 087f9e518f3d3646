"""Config module."""

from .config import ToolkitConfig

__all__ = ['ToolkitConfig']
