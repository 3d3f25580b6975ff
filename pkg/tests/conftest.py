import pytest

from pogs import GeneratorConfig, iter_structures


@pytest.fixture(scope="session")
def corpus3():
    """Every structure with n <= 3, m <= 2 and every compatible order."""
    return list(iter_structures(GeneratorConfig(max_n=3, max_m=2)))


@pytest.fixture(scope="session")
def small_corpus():
    """Same shape capped at two elements; cheap enough for nested scans."""
    return list(iter_structures(GeneratorConfig(max_n=2, max_m=2)))
