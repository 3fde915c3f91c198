"""Shared fixtures for the test suite."""

import pytest

from catalan_integrals.quadrature import QuadConfig


@pytest.fixture()
def cfg() -> QuadConfig:
    """Default quadrature configuration used throughout the suite."""
    return QuadConfig()
