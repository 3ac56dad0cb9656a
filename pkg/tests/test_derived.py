import json

import networkx as nx
import pytest

from conftest import atlas_where, to_nx
from totalgraphs.coloring.oracles import clique_number
from totalgraphs.derived import (
    EVertex,
    VVertex,
    element_from_json,
    element_map_to_json,
    line_graph,
    square,
    subdivision,
    to_dot,
    total_graph,
)
from totalgraphs.generators import complete, cycle, path, star
from totalgraphs.graph import Graph


def edge_set(g):
    return set(g.edges)


class TestTotalGraph:
    def test_k2_is_k3(self):
        t = total_graph(complete(2))
        assert edge_set(t.graph) == edge_set(complete(3))
        assert t.element(2) == EVertex(0, 1)

    def test_p3_neighbourhood(self):
        t = total_graph(path(3))
        assert t.graph.n == 5
        around = {t.element(x) for x in t.graph.adjacency[t.index(EVertex(0, 1))]}
        assert around == {VVertex(0), VVertex(1), EVertex(1, 2)}

    def test_k3_clique_number(self):
        t = total_graph(complete(3))
        assert t.graph.n == 6
        assert clique_number(t.graph) == 3

    def test_dense_encoding(self):
        g = cycle(5)
        t = total_graph(g)
        for r, e in enumerate(g.edges):
            assert t.index(EVertex(*e)) == g.n + r
        assert [t.index(VVertex(v)) for v in range(g.n)] == list(range(g.n))

    def test_unknown_element(self):
        with pytest.raises(KeyError):
            total_graph(path(3)).index(EVertex(0, 2))

    def test_everything_on_atlas(self):
        for g in atlas_where(lambda g: g.n <= 6):
            t = total_graph(g)
            for x in range(g.n):
                assert t.graph.degree(x) == 2 * g.degree(x)
            for r, (u, v) in enumerate(g.edges):
                assert t.graph.degree(g.n + r) == g.degree(u) + g.degree(v)
            vblock, _ = t.graph.induced_subgraph(range(g.n))
            assert vblock == g
            eblock, _ = t.graph.induced_subgraph(range(g.n, g.n + g.m))
            assert eblock == line_graph(g)[0]


class TestLineGraph:
    @pytest.mark.parametrize("g, expected", [(path(3), complete(2)), (complete(3), complete(3)),
                                             (star(3), complete(3))])
    def test_examples(self, g, expected):
        assert line_graph(g)[0] == expected

    def test_agrees_with_networkx(self):
        for g in atlas_where(lambda g: g.n <= 6):
            h, edges = line_graph(g)
            ref = nx.line_graph(to_nx(g))
            expected = {tuple(sorted((edges.index(tuple(sorted(a))), edges.index(tuple(sorted(b))))))
                        for a, b in ref.edges()}
            assert edge_set(h) == expected


class TestSubdivision:
    def test_k2_is_p3(self):
        h, middle = subdivision(complete(2))
        assert middle == {(0, 1): 2}
        assert edge_set(h) == {(0, 2), (1, 2)}

    def test_k3_is_c6(self):
        h, _ = subdivision(complete(3))
        assert h.n == 6 and all(d == 2 for d in (h.degree(v) for v in range(6)))
        assert nx.is_isomorphic(to_nx(h), nx.cycle_graph(6))

    def test_p3_is_p5(self):
        h, _ = subdivision(path(3))
        assert nx.is_isomorphic(to_nx(h), nx.path_graph(5))


class TestSquare:
    def test_p4(self):
        assert edge_set(square(path(4))) == {(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)}

    def test_c5(self):
        assert square(cycle(5)) == complete(5)

    def test_complete_is_fixed(self):
        assert square(complete(3)) == complete(3)

    def test_square_of_subdivision_is_total_graph(self):
        g = complete(4)
        assert edge_set(square(subdivision(g)[0])) == edge_set(total_graph(g).graph)


class TestExport:
    def test_element_json_round_trip(self):
        for el in (VVertex(3), EVertex(1, 4)):
            assert element_from_json(json.loads(json.dumps(el.to_json()))) == el
        assert element_from_json({"kind": "e", "u": 4, "v": 1}) == EVertex(1, 4)

    def test_element_map(self):
        data = json.loads(element_map_to_json(total_graph(complete(2))))
        assert data["element_map"][2] == {"index": 2, "kind": "e", "u": 0, "v": 1}

    def test_dot_distinguishes_kinds(self):
        dot = to_dot(total_graph(path(3)))
        assert dot.count("shape=circle") == 3 and dot.count("shape=box") == 2
        assert to_dot(Graph(2, [(0, 1)])).strip().endswith("}")
