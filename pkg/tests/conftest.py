"""Shared fixtures: the bundled table, loaded once per session."""

from __future__ import annotations

import pytest

from warpdeg.table import KnotTable, load_table


@pytest.fixture(scope="session")
def table() -> KnotTable:
    return load_table()
