import random

import pytest

from tokenthick.graph import Graph


def random_graph(rng: random.Random, order: int, p: float) -> Graph:
    return Graph(order, [(i, j) for i in range(order) for j in range(i + 1, order) if rng.random() < p])


def random_corpus(seed: int = 2017, count: int = 50, max_order: int = 9) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_graph(rng, rng.randint(4, max_order), rng.uniform(0.2, 0.8))
        if g.size:
            out.append(g)
    return out


def random_partition(rng: random.Random, g: Graph, parts: int):
    """Random split of E(g) into exactly ``parts`` non-empty parts."""
    edges = list(g.edges)
    rng.shuffle(edges)
    buckets = [[e] for e in edges[:parts]]
    for e in edges[parts:]:
        buckets[rng.randrange(parts)].append(e)
    return buckets


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()
