"""
Configuration package for the project.
"""

from .settings import settings

__all__ = ["settings"] 