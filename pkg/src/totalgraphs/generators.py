"""Deterministic graph families for experiments and the test corpus."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def hypercube(d: int) -> Graph:
    if d < 0:
        raise ValueError("dimension must be non-negative")
    return Graph(1 << d, ((v, v ^ (1 << i)) for v in range(1 << d) for i in range(d) if not v >> i & 1))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, (e for e in combinations(range(n), 2) if rng.random() < p))


def random_5_partite(n: int, p: float, seed: int) -> tuple[Graph, list[int]]:
    """Random graph whose vertices fall into five independent classes.

    Each vertex gets a class uniformly at random; each pair in different
    classes becomes an edge with probability ``p``.  Returns the graph and the
    planted coloring (class + 1, so colors lie in 1..5).
    """
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    part = [rng.randrange(5) for _ in range(n)]
    edges = [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v] and rng.random() < p]
    return Graph(n, edges), [c + 1 for c in part]


FAMILIES = {
    "complete": (complete, (int,)),
    "cycle": (cycle, (int,)),
    "path": (path, (int,)),
    "star": (star, (int,)),
    "complete_bipartite": (complete_bipartite, (int, int)),
    "hypercube": (hypercube, (int,)),
    "petersen": (petersen, ()),
}
