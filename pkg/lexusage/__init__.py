"""Lexical usage measures - single package."""

__version__ = '1.0.0'
"""Current version of this package."""
