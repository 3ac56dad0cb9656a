"""Edge coloring with at most Delta+1 colors (Misra-Gries fan rotation)."""

from __future__ import annotations

from ..derived import line_graph
from ..errors import BudgetExceededError
from ..graph import Graph, max_degree
from .vertex import exact_vertex_coloring

EXACT_EDGE_LIMIT = 16


def vizing_edge_coloring(g: Graph, exact_up_to: int = EXACT_EDGE_LIMIT) -> list[int]:
    """Proper edge coloring of ``g`` with colors in ``1..Delta+1``.

    The result is indexed by edge rank.  Edges are colored in rank order;
    each uncolored edge ``(x, y)`` is handled by building a fan at ``x``,
    inverting a two-colored alternating path from ``x`` and rotating a prefix
    of the fan.  Free colors are always chosen lowest first.

    Fan rotation alone often spends Delta+1 colors on class I graphs.  For
    graphs with at most ``exact_up_to`` edges that happens, an exhaustive
    search for a Delta-coloring of the line graph follows, so small graphs
    always come back with exactly chi'(G) colors.
    """
    colors = _fan_rotation(g)
    delta = max_degree(g)
    if g.m <= exact_up_to and delta >= 1 and max(colors) > delta:
        try:
            better = exact_vertex_coloring(line_graph(g)[0], delta)
        except BudgetExceededError:
            better = None
        if better is not None:
            colors = better
    return colors


def _fan_rotation(g: Graph) -> list[int]:
    at: list[dict[int, int]] = [{} for _ in range(g.n)]  # color -> neighbour
    color: dict[tuple[int, int], int] = {}

    def key(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    def free(v: int) -> int:
        c = 1
        used = at[v]
        while c in used:
            c += 1
        return c

    def paint(u: int, v: int, c: int) -> None:
        at[u][c] = v
        at[v][c] = u
        color[key(u, v)] = c

    def erase(u: int, v: int) -> int:
        c = color.pop(key(u, v))
        del at[u][c]
        del at[v][c]
        return c

    for x, y in g.edges:
        fan = [y]
        position = {y: 0}
        c = free(x)
        while True:
            d = free(fan[-1])
            u = at[x].get(d)
            if u is None or u in position:
                break
            position[u] = len(fan)
            fan.append(u)

        # invert the cd-path starting at x (it begins with x's d-edge, c is free at x)
        path = []
        cur, want, other = x, d, c
        while c != d and want in at[cur]:
            nxt = at[cur][want]
            path.append((cur, nxt, want))
            cur, want, other = nxt, other, want
        for a, b, _ in path:
            erase(a, b)
        for a, b, was in path:
            paint(a, b, c if was == d else d)

        w = len(fan) - 1
        if u is not None:
            j = position[u]
            if d not in at[fan[j - 1]]:
                w = j - 1
        for i in range(w):
            shifted = erase(x, fan[i + 1])
            paint(x, fan[i], shifted)
        paint(x, fan[w], d)

    return [color[e] for e in g.edges]


def is_proper_edge_coloring(g: Graph, colors: list[int]) -> bool:
    if len(colors) != g.m:
        return False
    seen: list[set[int]] = [set() for _ in range(g.n)]
    for (u, v), c in zip(g.edges, colors):
        if c in seen[u] or c in seen[v]:
            return False
        seen[u].add(c)
        seen[v].add(c)
    return True


def colors_within_vizing_bound(g: Graph, colors: list[int]) -> bool:
    top = max_degree(g) + 1
    return all(1 <= c <= top for c in colors)
