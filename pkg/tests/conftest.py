"""Shared test configuration: the dual audit triangle stays on for every test."""

import pytest

from momidual import ideals


@pytest.fixture(scope="session", autouse=True)
def dual_audit_enabled():
    """Every alexander_dual call in the suite is cross-checked three ways."""
    previous = ideals.DUAL_AUDIT
    ideals.DUAL_AUDIT = True
    yield
    ideals.DUAL_AUDIT = previous
