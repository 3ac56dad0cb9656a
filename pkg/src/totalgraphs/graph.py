"""Simple undirected graphs, the edge-list text format, and connectivity.

Vertices are the integers ``0..n-1``.  Every edge is stored canonically as a
pair ``(u, v)`` with ``u < v``; the position of an edge in the sorted edge
tuple is its *rank*, which indexes per-edge arrays elsewhere in the package.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from typing import TextIO

from .errors import GraphFormatError, PreconditionError

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adjacency", "_rank")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canon.add(canonical_edge(u, v))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(canon))
        self._rank = {e: r for r, e in enumerate(self.edges)}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._rank

    def edge_rank(self, u: int, v: int) -> int:
        """Dense index of edge ``uv``; raises ``KeyError`` if absent."""
        return self._rank[canonical_edge(u, v)]

    def incident_edges(self, v: int) -> list[Edge]:
        return [canonical_edge(v, u) for u in self.adjacency[v]]

    def without_edge(self, u: int, v: int) -> Graph:
        e = canonical_edge(u, v)
        return Graph(self.n, (f for f in self.edges if f != e))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Subgraph induced by ``vertices``, relabelled densely.

        Returns the subgraph and the list mapping new labels to old ones.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        sub_edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), sub_edges), keep

    def remove_vertices(self, removed: Iterable[int]) -> tuple[Graph, list[int]]:
        gone = set(removed)
        return self.induced_subgraph(v for v in range(self.n) if v not in gone)


# ---------------------------------------------------------------------------
# Edge-list text format

def parse_graph(text: str | Iterable[str]) -> Graph:
    """Parse the ``p <n> <m>`` / ``e <u> <v>`` edge-list format.

    Comment lines start with ``c``; blank lines are ignored.  Duplicate edge
    lines collapse to a single edge, but the number of ``e`` lines must match
    the header.
    """
    lines = text.splitlines() if isinstance(text, str) else list(text)
    n = declared_m = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(tokens) != 3:
                raise GraphFormatError(f"malformed header {raw.strip()!r}", lineno)
            n, declared_m = _ints(tokens[1:], lineno)
            if n < 0 or declared_m < 0:
                raise GraphFormatError("negative count in header", lineno)
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(tokens) != 3:
                raise GraphFormatError(f"malformed edge line {raw.strip()!r}", lineno)
            u, v = _ints(tokens[1:], lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"vertex index out of range in edge ({u}, {v}), n={n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(edges) != declared_m:
        raise GraphFormatError(f"header declares {declared_m} edges, found {len(edges)}")
    return Graph(n, edges)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def write_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p {g.n} {g.m}")
    out.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_graph(fp: TextIO) -> Graph:
    return parse_graph(fp.read())


# ---------------------------------------------------------------------------
# Degrees and components

def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def min_degree(g: Graph) -> int:
    return min((len(a) for a in g.adjacency), default=0)


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Vertex classes of the components of ``g`` minus ``removed``.

    Classes are sorted and listed in order of their smallest vertex.
    """
    seen = [False] * g.n
    for v in removed:
        seen[v] = True
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def cut_vertices(g: Graph) -> set[int]:
    """Articulation points by iterative DFS low-link."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frames: (vertex, parent, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, pos = stack[-1]
            nbrs = g.adjacency[v]
            if pos < len(nbrs):
                stack[-1] = (v, parent, pos + 1)
                w = nbrs[pos]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, 0))
                elif w != parent:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if parent != root and low[v] >= disc[parent]:
                        cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return cuts


def is_biconnected(g: Graph) -> bool:
    """Connected, at least three vertices, and no cut vertex."""
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


# ---------------------------------------------------------------------------
# Flow-based connectivity

def _max_flow(capacity: dict[int, dict[int, int]], s: int, t: int, limit: int | None = None) -> int:
    """Edmonds-Karp on a residual map; stops early once ``limit`` is reached."""
    flow = 0
    while limit is None or flow < limit:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for y, cap in capacity[x].items():
                if cap > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if t not in parent:
            break
        # all capacities on the split network are 1, so each path carries one unit
        y = t
        while y != s:
            x = parent[y]
            capacity[x][y] -= 1
            capacity[y][x] = capacity[y].get(x, 0) + 1
            y = x
        flow += 1
    return flow


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent)."""
    if g.has_edge(s, t):
        raise ValueError("local vertex connectivity needs non-adjacent endpoints")
    # vertex x becomes x_in = 2x, x_out = 2x + 1
    cap: dict[int, dict[int, int]] = {i: {} for i in range(2 * g.n)}
    for x in range(g.n):
        cap[2 * x][2 * x + 1] = g.n if x in (s, t) else 1
    for u, v in g.edges:
        cap[2 * u + 1][2 * v] = 1
        cap[2 * v + 1][2 * u] = 1
    return _max_flow(cap, 2 * s + 1, 2 * t, limit)


def local_edge_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    cap: dict[int, dict[int, int]] = {i: {} for i in range(g.n)}
    for u, v in g.edges:
        cap[u][v] = 1
        cap[v][u] = 1
    return _max_flow(cap, s, t, limit)


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); ``n-1`` for complete graphs and 0 when disconnected."""
    if g.n <= 1 or not is_connected(g):
        return 0
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    best = g.n - 1
    # Some vertex among the first best+1 lies outside a minimum cut (Even's argument).
    i = 0
    while i <= best and i < g.n:
        for j in range(g.n):
            if j != i and not g.has_edge(i, j):
                best = min(best, local_vertex_connectivity(g, i, j, limit=best))
        i += 1
    return best


def edge_connectivity(g: Graph) -> int:
    if g.n <= 1 or not is_connected(g):
        return 0
    best = min_degree(g)
    for t in range(1, g.n):
        best = min(best, local_edge_connectivity(g, 0, t, limit=best))
    return best


# ---------------------------------------------------------------------------
# Separators

def is_separator(g: Graph, s: Iterable[int]) -> bool:
    """True iff deleting ``s`` leaves more components than ``g`` has."""
    s = set(s)
    if not s <= set(range(g.n)):
        raise ValueError("separator candidate contains vertices outside the graph")
    before = len(connected_components(g))
    after = len(connected_components(g, removed=s))
    return after > before


def find_non_separating_neighbor(g: Graph, v: int) -> int:
    """Smallest ``w`` adjacent to ``v`` such that ``{v, w}`` does not separate ``g``.

    ``g`` must be 2-connected, in which case such a neighbour always exists.
    """
    if not is_biconnected(g):
        raise PreconditionError("graph must be 2-connected (connected, n >= 3, no cut vertex)")
    for w in g.adjacency[v]:
        if not is_separator(g, (v, w)):
            return w
    raise AssertionError(f"no non-separating neighbour of {v} in a 2-connected graph")
