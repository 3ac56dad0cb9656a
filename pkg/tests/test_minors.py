import json
from itertools import combinations

import pytest

from conftest import atlas_where
from totalgraphs.derived import EVertex, VVertex, total_graph
from totalgraphs.errors import MinorConstructionError, PreconditionError, SizeGuardError
from totalgraphs.generators import complete, complete_bipartite, cycle, hypercube, path
from totalgraphs.graph import Graph, edge_connectivity, is_connected, max_degree
from totalgraphs.minors import (
    CONNECTIVITY,
    CRITICAL3_RELAXED,
    MinorCertificate,
    PartitionWitness,
    TreePacking,
    critical_subgraph_with_map,
    edge_disjoint_spanning_trees,
    hadwiger_report,
    is_total_critical,
    minor_certificate_from_connectivity,
    minor_from_critical_delta_plus_2,
    minor_from_critical_delta_plus_3,
    total_critical_subgraph,
    verify_minor_certificate,
    verify_tree_packing,
)
from totalgraphs.coloring.oracles import brute_force_total_chromatic


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def packable_by_partition_count(g: Graph, k: int) -> bool:
    for parts in set_partitions(list(range(g.n))):
        owner = {v: i for i, p in enumerate(parts) for v in p}
        cross = sum(owner[u] != owner[v] for u, v in g.edges)
        if cross < k * (len(parts) - 1):
            return False
    return True


class TestVerifier:
    def test_single_set(self):
        t = total_graph(complete(2))
        assert verify_minor_certificate(t, MinorCertificate([[VVertex(0)]], 1, "x")).valid

    def test_k2_three_singletons(self):
        t = total_graph(complete(2))
        cert = MinorCertificate([[VVertex(0)], [VVertex(1)], [EVertex(0, 1)]], 3, "x")
        assert verify_minor_certificate(t, cert).valid

    def test_names_non_adjacent_pair(self):
        t = total_graph(path(4))
        report = verify_minor_certificate(t, MinorCertificate([[VVertex(0)], [VVertex(3)]], 2, "x"))
        assert report.failures == ["branch sets 0 and 1 are not adjacent"]

    def test_disconnected_set(self):
        t = total_graph(path(3))
        report = verify_minor_certificate(t, MinorCertificate([[VVertex(0), VVertex(2)]], 1, "x"))
        assert any("not connected" in f for f in report.failures)

    def test_out_of_range(self):
        t = total_graph(path(3))
        with pytest.raises(PreconditionError):
            verify_minor_certificate(t, MinorCertificate([[VVertex(7)]], 1, "x"))

    def test_json_round_trip(self):
        cert = minor_certificate_from_connectivity(complete(5), 2)
        back = MinorCertificate.from_json(json.loads(json.dumps(cert.to_json())))
        assert back == cert


class TestTreePacking:
    def test_k4_two_trees(self):
        res = edge_disjoint_spanning_trees(complete(4), 2)
        assert isinstance(res, TreePacking)
        assert verify_tree_packing(complete(4), res) == []
        assert sorted(e for t in res.trees for e in t) == sorted(complete(4).edges)

    def test_c4_witness(self):
        res = edge_disjoint_spanning_trees(cycle(4), 2)
        assert isinstance(res, PartitionWitness)
        assert res.parts == [[0], [1], [2], [3]]
        assert res.cross_edges == 4 < res.required == 6

    def test_k6_two_trees(self):
        res = edge_disjoint_spanning_trees(complete(6), 2)
        assert isinstance(res, TreePacking) and verify_tree_packing(complete(6), res) == []

    def test_disconnected(self):
        with pytest.raises(PreconditionError):
            edge_disjoint_spanning_trees(Graph(4, [(0, 1), (2, 3)]), 1)

    def test_single_vertex(self):
        assert edge_disjoint_spanning_trees(Graph(1, []), 3).trees == [[], [], []]

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_matches_partition_condition(self, k):
        for g in atlas_where(lambda g: g.n <= 6 and is_connected(g)):
            res = edge_disjoint_spanning_trees(g, k)
            expected = packable_by_partition_count(g, k)
            assert isinstance(res, TreePacking) == expected
            if expected:
                assert verify_tree_packing(g, res) == []
            else:
                assert res.cross_edges < res.required


class TestConnectivityConstruction:
    @pytest.mark.parametrize("g, k", [(complete(4), 1), (complete(6), 3), (hypercube(4), 2),
                                      (complete(5), 2), (complete_bipartite(5, 5), 3)])
    def test_order(self, g, k):
        cert = minor_certificate_from_connectivity(g, k)
        assert cert.order == max_degree(g) + k
        assert cert.provenance == CONNECTIVITY
        assert verify_minor_certificate(total_graph(g), cert).valid

    def test_branch_set_shape(self):
        g = complete(6)
        cert = minor_certificate_from_connectivity(g, 3)
        sizes = sorted(len(s) for s in cert.branch_sets)
        assert sizes == [1] * 5 + [4, 4, 5]

    def test_k1_with_cut_vertex(self):
        g = path(3)
        cert = minor_certificate_from_connectivity(g, 1)
        assert cert.order == 3 and [VVertex(1)] in cert.branch_sets

    def test_precondition(self):
        with pytest.raises(MinorConstructionError):
            minor_certificate_from_connectivity(cycle(4), 3)


class TestCriticality:
    def test_k2(self):
        assert is_total_critical(complete(2), 3)

    def test_p3(self):
        g = path(3)
        assert brute_force_total_chromatic(g) == 3
        assert all(brute_force_total_chromatic(g.without_edge(*e)) == 3 for e in g.edges)
        assert not is_total_critical(g, 3)

    def test_c5(self):
        g = cycle(5)
        drops = [brute_force_total_chromatic(g.without_edge(*e)) for e in g.edges]
        assert is_total_critical(g, 4) == (brute_force_total_chromatic(g) == 4 and max(drops) < 4)
        assert is_total_critical(g, 4)

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            is_total_critical(complete(6), 7)

    def test_subgraph_examples(self):
        assert total_critical_subgraph(Graph(3, [(0, 1)]), 3) == complete(2)
        h = total_critical_subgraph(complete(3), 3)
        assert is_total_critical(h, 3) and h == complete(2)
        h = total_critical_subgraph(cycle(5), 4)
        assert is_total_critical(h, 4)

    def test_subgraph_map(self):
        g = Graph(5, [(2, 4)])
        h, back = critical_subgraph_with_map(g, 3)
        assert h == complete(2) and back == [2, 4]

    def test_subgraph_rejects_low_target(self):
        with pytest.raises(PreconditionError):
            total_critical_subgraph(cycle(4), 5)


class TestCriticalConstructions:
    def test_k2(self):
        cert = minor_from_critical_delta_plus_2(complete(2))
        assert cert.order == 3

    def test_c5(self):
        cert = minor_from_critical_delta_plus_2(cycle(5))
        assert cert.order == 4 and len(cert.branch_sets[-1]) == 7

    def test_cut_vertex_fails_verification(self):
        # vertex 0 has maximum degree and is a cut vertex
        g = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (0, 4)])
        with pytest.raises(MinorConstructionError, match="not connected"):
            minor_from_critical_delta_plus_2(g)

    def test_relaxed_k7(self):
        cert = minor_from_critical_delta_plus_3(complete(7), relaxed=True)
        assert cert.order == 9 and cert.provenance == CRITICAL3_RELAXED

    def test_relaxed_k44(self):
        g = complete_bipartite(4, 4)
        cert = minor_from_critical_delta_plus_3(g, relaxed=True)
        assert cert.order == 7
        s0 = cert.branch_sets[0]
        w = s0[1].id
        e1, e2 = cert.branch_sets[-2][-1], cert.branch_sets[-1][-1]
        assert w in (e1.u, e1.v) and w in (e2.u, e2.v)
        report = verify_minor_certificate(total_graph(g), cert)
        assert report.valid

    def test_p3(self):
        with pytest.raises(MinorConstructionError, match=r"deg\(w\) < 3"):
            minor_from_critical_delta_plus_3(path(3))

    def test_strict_refuses_non_critical(self):
        with pytest.raises(MinorConstructionError):
            minor_from_critical_delta_plus_3(complete(4))

    def test_relaxed_needs_min_degree(self):
        g = complete(4).without_edge(2, 3)
        with pytest.raises(MinorConstructionError, match="minimum degree"):
            minor_from_critical_delta_plus_3(g, relaxed=True)


class TestHadwigerReport:
    def test_k2(self):
        r = hadwiger_report(complete(2))
        assert (r.total_chromatic, r.certificate_order, r.holds) == (3, 3, True)

    def test_c5(self):
        r = hadwiger_report(cycle(5))
        assert r.total_chromatic == 4 and r.certificate_order >= 4 and r.holds

    def test_k5(self):
        r = hadwiger_report(complete(5), max_elements=15)
        assert r.total_chromatic == brute_force_total_chromatic(complete(5), 15) == 5
        assert r.certificate_order == 6 and r.certificate.provenance == CONNECTIVITY

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            hadwiger_report(complete(5))

    def test_certificates_verify_on_atlas(self):
        for g in atlas_where(lambda g: g.m >= 1 and g.n + g.m <= 11):
            r = hadwiger_report(g)
            assert verify_minor_certificate(total_graph(g), r.certificate).valid
            assert r.holds


def test_claim_on_small_two_connected_graphs():
    for g in atlas_where(lambda g: g.n >= 3 and edge_connectivity(g) >= 2):
        for k in (1, 2):
            if 2 * k <= edge_connectivity(g):
                assert isinstance(edge_disjoint_spanning_trees(g, k), TreePacking)


def test_corpus_connectivity_property():
    from totalgraphs.graph import vertex_connectivity
    count = 0
    for g in atlas_where(lambda g: g.n >= 2 and is_connected(g)):
        kappa = vertex_connectivity(g)
        for k in (1, 2, 3):
            if kappa >= 2 * k - 1:
                cert = minor_certificate_from_connectivity(g, k)
                assert cert.order == max_degree(g) + k
                count += 1
    assert count > 800
