"""Tests package for Market Sentiment Analyzer."""

__all__ = []
