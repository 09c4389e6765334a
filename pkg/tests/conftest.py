import pytest

from tamari.counting import census, enumerate_maximal_chains


class _LazyCensus:
    """Compute each lattice census once per test session."""

    def __init__(self):
        self._store = {}

    def __getitem__(self, n: int):
        if n not in self._store:
            self._store[n] = census(n)
        return self._store[n]


@pytest.fixture(scope="session")
def censuses():
    return _LazyCensus()


@pytest.fixture(scope="session")
def chains_by_order():
    """All maximal chains as tableaux, for orders small enough to keep around."""
    return {n: list(enumerate_maximal_chains(n)) for n in range(1, 7)}
