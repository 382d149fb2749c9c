import pytest

from polyheap import paths
from polyheap.paths import Mode


@pytest.fixture(scope="session")
def cat_paths_by_length():
    """All catastrophe excursions of length 0..10, keyed by length."""
    return {n: list(paths.enumerate_paths(n, Mode.CAT)) for n in range(11)}
