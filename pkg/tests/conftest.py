from __future__ import annotations

import functools

import networkx as nx
from hypothesis import strategies as st

from totalgraphs.graph import Graph


@functools.lru_cache(maxsize=None)
def atlas() -> tuple[Graph, ...]:
    """All graphs on at most 7 vertices, one per isomorphism class (networkx atlas)."""
    return tuple(Graph(h.number_of_nodes(), h.edges()) for h in nx.graph_atlas_g() if h.number_of_nodes() > 0)


def atlas_where(pred):
    return [g for g in atlas() if pred(g)]


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


