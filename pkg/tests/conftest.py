import pytest

from confstab import EnumerationBounds, enumerate_generators


@pytest.fixture(scope="session")
def gens_cache():
    cache = {}

    def get(n, p, D, K):
        key = (n, p, D, K)
        if key not in cache:
            cache[key] = enumerate_generators(n, p, EnumerationBounds(D, K))
        return cache[key]

    return get
