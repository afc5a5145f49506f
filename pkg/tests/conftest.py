"""Shared fixtures: exhaustive clique-vector censuses are computed once per session."""
import asyncio

import pytest

from cliquebounds.oracle import sweep_clique_vectors


@pytest.fixture(scope="session")
def census5():
    return asyncio.run(sweep_clique_vectors(5, chunk_count=8))


@pytest.fixture(scope="session")
def census6():
    return asyncio.run(sweep_clique_vectors(6, chunk_count=16))


@pytest.fixture(scope="session")
def census7():
    return asyncio.run(sweep_clique_vectors(7))
