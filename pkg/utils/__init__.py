"""Utilities package (kept intentionally thin)."""

__all__ = []
