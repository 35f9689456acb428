import pytest

from matchbook.generators import corpus
from matchbook.graphs import from_edge_list

# cube on binary coordinates, written down by hand: vertices are 3-bit
# words, edges join words differing in one bit
CUBE_EDGES = [
    (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3),
    (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7),
]


@pytest.fixture(scope="session")
def cube():
    return from_edge_list(8, CUBE_EDGES)


@pytest.fixture(scope="session")
def c4():
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture(scope="session")
def c6():
    return from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture(scope="session")
def k33():
    return from_edge_list(6, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)])


@pytest.fixture(scope="session")
def k4():
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def full_corpus():
    return corpus()
