"""Total graph, line graph, subdivision and square of a graph."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .graph import Edge, Graph, canonical_edge


@dataclass(frozen=True, order=True)
class VVertex:
    """Total-graph vertex standing for a vertex of the base graph."""

    id: int

    def to_json(self) -> dict:
        return {"kind": "v", "id": self.id}


@dataclass(frozen=True, order=True)
class EVertex:
    """Total-graph vertex standing for an edge ``(u, v)``, ``u < v``, of the base graph."""

    u: int
    v: int

    def __post_init__(self):
        if self.u >= self.v:
            raise ValueError(f"EVertex needs u < v, got ({self.u}, {self.v})")

    @property
    def edge(self) -> Edge:
        return (self.u, self.v)

    def to_json(self) -> dict:
        return {"kind": "e", "u": self.u, "v": self.v}


ElementId = Union[VVertex, EVertex]


def element_from_json(obj: dict) -> ElementId:
    kind = obj.get("kind")
    if kind == "v":
        return VVertex(int(obj["id"]))
    if kind == "e":
        u, v = canonical_edge(int(obj["u"]), int(obj["v"]))
        return EVertex(u, v)
    raise ValueError(f"unknown element kind {kind!r}")


class TotalGraph:
    """T(G) together with the map between its vertex indices and base elements.

    Index ``i < n`` is the v-vertex of base vertex ``i``; index ``n + r`` is
    the e-vertex of the base edge of rank ``r``.
    """

    def __init__(self, base: Graph):
        self.base = base
        n = base.n
        edges: list[Edge] = []
        for r, (u, v) in enumerate(base.edges):
            x = n + r
            edges.append((u, v))      # adjacent vertices
            edges.append((u, x))      # incidences
            edges.append((v, x))
        for w in range(n):
            inc = [n + base.edge_rank(w, y) for y in base.adjacency[w]]
            for a in range(len(inc)):
                for b in range(a + 1, len(inc)):
                    edges.append((inc[a], inc[b]))  # edges sharing w
        self.graph = Graph(n + base.m, edges)

    def __repr__(self) -> str:
        return f"TotalGraph(base={self.base!r})"

    def index(self, element: ElementId) -> int:
        if isinstance(element, VVertex):
            if not 0 <= element.id < self.base.n:
                raise KeyError(f"{element} not in base graph")
            return element.id
        if not self.base.has_edge(element.u, element.v):
            raise KeyError(f"{element} not in base graph")
        return self.base.n + self.base.edge_rank(element.u, element.v)

    def element(self, index: int) -> ElementId:
        n = self.base.n
        if 0 <= index < n:
            return VVertex(index)
        if n <= index < n + self.base.m:
            return EVertex(*self.base.edges[index - n])
        raise KeyError(index)

    def elements(self) -> list[ElementId]:
        return [self.element(i) for i in range(self.graph.n)]

    def element_map_json(self) -> list[dict]:
        return [dict(index=i, **self.element(i).to_json()) for i in range(self.graph.n)]


def total_graph(g: Graph) -> TotalGraph:
    return TotalGraph(g)


def line_graph(g: Graph) -> tuple[Graph, list[Edge]]:
    """L(G); vertex ``r`` of the result is the base edge of rank ``r``."""
    edges = []
    for w in range(g.n):
        inc = [g.edge_rank(w, y) for y in g.adjacency[w]]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                edges.append((inc[a], inc[b]))
    return Graph(g.m, edges), list(g.edges)


def subdivision(g: Graph) -> tuple[Graph, dict[Edge, int]]:
    """Replace each edge ``uv`` by a path ``u w v`` with a fresh middle vertex.

    The middle vertex of the edge of rank ``r`` is ``n + r``.
    """
    middle = {e: g.n + r for r, e in enumerate(g.edges)}
    edges = []
    for (u, v), w in middle.items():
        edges.append((u, w))
        edges.append((v, w))
    return Graph(g.n + g.m, edges), middle


def square(g: Graph) -> Graph:
    """G^2 by a two-step neighbourhood sweep from every vertex."""
    edges = set()
    for u in range(g.n):
        for x in g.adjacency[u]:
            if u < x:
                edges.add((u, x))
            for y in g.adjacency[x]:
                if u < y:
                    edges.add((u, y))
    return Graph(g.n, edges)


# ---------------------------------------------------------------------------
# Export

def to_dot(g: Graph | TotalGraph, name: str = "G") -> str:
    if isinstance(g, TotalGraph):
        t = g
        lines = [f"graph {name} {{"]
        for i in range(t.graph.n):
            el = t.element(i)
            if isinstance(el, VVertex):
                lines.append(f'  {i} [label="v{el.id}", shape=circle, style=filled, fillcolor=lightblue];')
            else:
                lines.append(f'  {i} [label="e{el.u}_{el.v}", shape=box, style=filled, fillcolor=lightyellow];')
        lines.extend(f"  {u} -- {v};" for u, v in t.graph.edges)
    else:
        lines = [f"graph {name} {{"]
        lines.extend(f"  {v};" for v in range(g.n))
        lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def element_map_to_json(t: TotalGraph) -> str:
    return json.dumps({"n": t.base.n, "m": t.base.m, "element_map": t.element_map_json()}, indent=2)

