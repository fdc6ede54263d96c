import random

import pytest

from bicliques import Graph, OctDecomposition


def er_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def bipartite_er_graph(rng: random.Random, a: int, b: int, p: float):
    """Random bipartite graph; returns (graph, decomposition with empty O)."""
    edges = [
        (u, a + v) for u in range(a) for v in range(b) if rng.random() < p
    ]
    g = Graph.from_edges(a + b, edges)
    d = OctDecomposition.from_sets(a + b, range(a), range(a, a + b), ())
    return g, d


@pytest.fixture
def p3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def p4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def c5() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture
def k3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def k22() -> Graph:
    return Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
