"""
Configuration package for tracklab.
Handles environment variables and application settings.
"""

from .settings import Settings, settings

__all__ = ['Settings', 'settings']
