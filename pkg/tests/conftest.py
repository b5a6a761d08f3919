import random

import pytest

from arrowkit.catalog import enumerate_graphs_small
from arrowkit.graph import Graph


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_graphs(n: int, count: int, seed: int = 2024, p: float = 0.5) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(n, p, rng) for _ in range(count)]


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    """Every graph on at most 6 vertices (156 on 6), one per isomorphism class."""
    return [g for n in range(1, 7) for g in enumerate_graphs_small(n)]
