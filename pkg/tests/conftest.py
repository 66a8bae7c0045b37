from functools import lru_cache

import pytest

from qlscrystal import root_system, shape_of


@lru_cache(maxsize=None)
def cached_shape(name: str, weight: tuple[int, ...]):
    return shape_of(root_system(name), weight)


@pytest.fixture
def a1():
    return root_system("A1")


@pytest.fixture
def a2():
    return root_system("A2")


@pytest.fixture
def c2():
    return root_system("C2")


@pytest.fixture
def shape_a1_1():
    return cached_shape("A1", (1,))


@pytest.fixture
def shape_a1_2():
    return cached_shape("A1", (2,))


@pytest.fixture
def shape_a2_10():
    return cached_shape("A2", (1, 0))


@pytest.fixture
def shape_a2_11():
    return cached_shape("A2", (1, 1))
