import pytest

from dyckposet import build_poset


@pytest.fixture(scope="session")
def posets():
    """One shared DyckPoset per order, built lazily."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_poset(n)
        return cache[n]

    return get
