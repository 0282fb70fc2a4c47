import sys

import pytest

from deadend.core import default_store
from deadend.enumeration import generate_day

sys.setrecursionlimit(20000)


@pytest.fixture(scope="session")
def store():
    return default_store()


@pytest.fixture(scope="session")
def day():
    """Canonical ends born by day n, from the shared default store."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = generate_day(n).games
        return cache[n]

    return get
