"""Shared factory helpers for building scenario and chain instances in tests."""

from tests.factories.models import make_chain_config, make_concentric, make_document, make_open_chain

__all__ = [
    "make_chain_config",
    "make_concentric",
    "make_document",
    "make_open_chain",
]
