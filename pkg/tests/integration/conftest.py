"""Shared pytest configuration for integration tests."""

import pytest

from config.chain import ChainConfig
from tests.factories import make_chain_config

LONG_RUN_STEPS = 10_000


@pytest.fixture
def long_run() -> ChainConfig:
    """Chain config with the full step budget used by the acceptance runs."""
    return make_chain_config(max_steps=LONG_RUN_STEPS)
