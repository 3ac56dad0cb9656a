"""Brute-force reference values for small graphs.

These routines deliberately share no search code with the colorers they are
used to check: each builds its target graph straight from the definitions
and runs a plain exhaustive search.
"""

from __future__ import annotations

from itertools import combinations

from ..errors import SizeGuardError
from ..graph import Graph

DEFAULT_MAX_ELEMENTS = 14


def _adjacency_from_pairs(n: int, pairs) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _colorable(adj: list[set[int]], k: int) -> bool:
    n = len(adj)
    order = sorted(range(n), key=lambda v: -len(adj[v]))
    color = [0] * n

    def place(idx: int, top: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for c in range(1, min(top + 1, k) + 1):
            if all(color[u] != c for u in adj[v]):
                color[v] = c
                if place(idx + 1, max(top, c)):
                    return True
                color[v] = 0
        return False

    return place(0, 0)


def _chromatic(adj: list[set[int]]) -> int:
    if not adj:
        return 0
    k = 1
    while not _colorable(adj, k):
        k += 1
    return k


def chromatic_number(g: Graph, max_vertices: int = 16) -> int:
    if g.n > max_vertices:
        raise SizeGuardError(f"{g.n} vertices exceeds the brute-force limit of {max_vertices}")
    return _chromatic(_adjacency_from_pairs(g.n, g.edges))


def _total_graph_adjacency(g: Graph) -> list[set[int]]:
    # elements: vertices 0..n-1, then edges in rank order
    elements: list[tuple] = [("v", x) for x in range(g.n)] + [("e", e) for e in g.edges]

    def adjacent(a, b) -> bool:
        if a[0] == "v" and b[0] == "v":
            return g.has_edge(a[1], b[1])
        if a[0] == "e" and b[0] == "e":
            return bool(set(a[1]) & set(b[1]))
        x, e = (a[1], b[1]) if a[0] == "v" else (b[1], a[1])
        return x in e

    pairs = [(i, j) for i, j in combinations(range(len(elements)), 2) if adjacent(elements[i], elements[j])]
    return _adjacency_from_pairs(len(elements), pairs)


def brute_force_total_chromatic(g: Graph, max_elements: int = DEFAULT_MAX_ELEMENTS) -> int:
    """Exact total chromatic number, i.e. the chromatic number of T(G)."""
    if g.n + g.m > max_elements:
        raise SizeGuardError(f"n+m = {g.n + g.m} exceeds the brute-force limit of {max_elements}")
    return _chromatic(_total_graph_adjacency(g))


def chromatic_index(g: Graph, max_edges: int = 16) -> int:
    if g.m > max_edges:
        raise SizeGuardError(f"{g.m} edges exceeds the brute-force limit of {max_edges}")
    pairs = [(i, j) for i, j in combinations(range(g.m), 2) if set(g.edges[i]) & set(g.edges[j])]
    return _chromatic(_adjacency_from_pairs(g.m, pairs))


def clique_number(g: Graph, max_vertices: int = 40) -> int:
    """Largest clique size by Bron-Kerbosch with pivoting."""
    if g.n > max_vertices:
        raise SizeGuardError(f"{g.n} vertices exceeds the clique search limit of {max_vertices}")
    adj = _adjacency_from_pairs(g.n, g.edges)
    best = 0

    def expand(size: int, cand: set[int], excl: set[int]) -> None:
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + len(cand) <= best:
            return
        pivot = max(cand | excl, key=lambda u: len(adj[u] & cand))
        for v in list(cand - adj[pivot]):
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand.remove(v)
            excl.add(v)

    expand(0, set(range(g.n)), set())
    return best


def total_graph_clique_number(g: Graph, max_elements: int = 20) -> int:
    if g.n + g.m > max_elements:
        raise SizeGuardError(f"n+m = {g.n + g.m} exceeds the clique search limit of {max_elements}")
    adj = _total_graph_adjacency(g)
    pairs = [(a, b) for a in range(len(adj)) for b in adj[a] if a < b]
    return clique_number(Graph(len(adj), pairs), max_vertices=max_elements)
