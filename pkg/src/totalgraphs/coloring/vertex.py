"""Exact k-coloring by DSATUR-ordered backtracking with a node budget."""

from __future__ import annotations

import sys

from ..errors import BudgetExceededError
from ..graph import Graph

DEFAULT_BUDGET = 200_000


def exact_vertex_coloring(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> list[int] | None:
    """Find a proper coloring of ``g`` with colors ``1..k``.

    Returns the color list, or ``None`` when the search proves that no
    k-coloring exists.  Raises :class:`BudgetExceededError` if more than
    ``budget`` color assignments are tried before a verdict.

    The next vertex is the uncolored one with the most distinct neighbour
    colors, ties broken by degree and then by lowest index.  Colors are tried
    lowest first, and never more than one above the largest color in use.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n
    adj = g.adjacency
    deg = [len(a) for a in adj]
    color = [0] * n
    counts = [[0] * (k + 1) for _ in range(n)]
    sat = [0] * n
    nodes = 0

    def select() -> int:
        best = -1
        best_key = (-1, -1)
        for v in range(n):
            if color[v] == 0:
                key = (sat[v], deg[v])
                if key > best_key:
                    best, best_key = v, key
        return best

    def assign(v: int, c: int) -> bool:
        color[v] = c
        dead = False
        for u in adj[v]:
            cu = counts[u]
            cu[c] += 1
            if cu[c] == 1:
                sat[u] += 1
                if sat[u] == k and color[u] == 0:
                    dead = True
        return not dead

    def unassign(v: int, c: int) -> None:
        color[v] = 0
        for u in adj[v]:
            cu = counts[u]
            cu[c] -= 1
            if cu[c] == 0:
                sat[u] -= 1

    def search(done: int, top: int) -> bool:
        nonlocal nodes
        if done == n:
            return True
        v = select()
        cv = counts[v]
        for c in range(1, min(top + 1, k) + 1):
            if cv[c]:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(f"exact {k}-coloring exceeded {budget} search nodes (n={n})")
            if assign(v, c) and search(done + 1, max(top, c)):
                return True
            unassign(v, c)
        return False

    old_limit = sys.getrecursionlimit()
    if n + 100 > old_limit:
        sys.setrecursionlimit(n + 100)
    try:
        found = search(0, 0)
    finally:
        sys.setrecursionlimit(old_limit)
    return list(color) if found else None


def is_proper_vertex_coloring(g: Graph, colors: list[int]) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges)
