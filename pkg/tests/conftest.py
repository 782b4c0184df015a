"""Shared fixtures: one fully built store per test session.

Orders 1..7 with every registry invariant take a few seconds total and are
reused by the store, API, CLI, and acceptance tests.  Order 8 is built lazily
by the tests that need it.
"""

import pytest

from polyfacets.store import Store


@pytest.fixture(scope="session")
def built_store(tmp_path_factory) -> Store:
    store = Store(tmp_path_factory.mktemp("session-store"))
    for order in range(1, 8):
        store.build(order, "all")
    store.build(7, "connected")
    store.build(7, "tree")
    return store


@pytest.fixture(scope="session")
def built_store_root(built_store) -> str:
    return str(built_store.root)
