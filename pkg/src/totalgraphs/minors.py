"""Clique-minor certificates in total graphs.

A certificate is a list of branch sets of total-graph elements.  It proves a
clique minor of order ``len(branch_sets)`` when the sets are non-empty,
pairwise disjoint, each induces a connected subgraph, and every two of them
are joined by an edge.  Constructors here always verify before returning.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .coloring.oracles import DEFAULT_MAX_ELEMENTS, brute_force_total_chromatic
from .derived import EVertex, ElementId, TotalGraph, VVertex, element_from_json, total_graph
from .errors import InvariantViolation, MinorConstructionError, PreconditionError, SizeGuardError
from .graph import (
    Edge,
    Graph,
    canonical_edge,
    connected_components,
    cut_vertices,
    find_non_separating_neighbor,
    is_biconnected,
    is_connected,
    max_degree,
    min_degree,
    vertex_connectivity,
)

CONNECTIVITY = "connectivity"
CRITICAL2 = "critical_delta_plus_2"
CRITICAL3 = "critical_delta_plus_3"
CRITICAL3_RELAXED = "critical_delta_plus_3_relaxed"
CLIQUE = "vertex_star_clique"


@dataclass
class MinorCertificate:
    branch_sets: list[list[ElementId]]
    order: int
    provenance: str

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "provenance": self.provenance,
            "branch_sets": [[el.to_json() for el in bs] for bs in self.branch_sets],
        }

    @classmethod
    def from_json(cls, obj: dict) -> MinorCertificate:
        try:
            sets = [[element_from_json(el) for el in bs] for bs in obj["branch_sets"]]
            return cls(sets, int(obj["order"]), str(obj.get("provenance", "")))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed certificate JSON: {exc}") from None

    def relabel(self, vertex_map: list[int], provenance: str | None = None) -> MinorCertificate:
        """Translate a certificate over T(H) into one over T(G), H a subgraph of G."""
        def move(el: ElementId) -> ElementId:
            if isinstance(el, VVertex):
                return VVertex(vertex_map[el.id])
            return EVertex(*canonical_edge(vertex_map[el.u], vertex_map[el.v]))
        return MinorCertificate([[move(el) for el in bs] for bs in self.branch_sets],
                                self.order, provenance or self.provenance)


@dataclass
class MinorReport:
    order: int
    failures: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"valid": self.valid, "order": self.order, "failures": self.failures}


def verify_minor_certificate(t: TotalGraph, cert: MinorCertificate) -> MinorReport:
    """Check the branch-set conditions and report every failed set or pair."""
    failures = []
    sets = cert.branch_sets
    if cert.order != len(sets):
        failures.append(f"claimed order {cert.order} but {len(sets)} branch sets given")
    owner: dict[int, int] = {}
    members: list[list[int]] = []
    for s, bs in enumerate(sets):
        idx = []
        for el in bs:
            try:
                idx.append(t.index(el))
            except KeyError:
                raise PreconditionError(f"branch set {s}: {el} is not an element of the base graph") from None
        if not idx:
            failures.append(f"branch set {s} is empty")
        for x in idx:
            if x in owner and owner[x] != s:
                failures.append(f"branch sets {owner[x]} and {s} overlap on {t.element(x)}")
            elif x in owner:
                failures.append(f"branch set {s} lists {t.element(x)} twice")
            else:
                owner[x] = s
        members.append(idx)

    adj = t.graph.adjacency
    for s, idx in enumerate(members):
        inside = set(idx)
        if not inside:
            continue
        start = idx[0]
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in inside and y not in seen:
                    seen.add(y)
                    queue.append(y)
        if seen != inside:
            failures.append(f"branch set {s} is not connected in the total graph")

    touching = set()
    for a, b in t.graph.edges:
        sa, sb = owner.get(a), owner.get(b)
        if sa is not None and sb is not None and sa != sb:
            touching.add((min(sa, sb), max(sa, sb)))
    for a in range(len(sets)):
        for b in range(a + 1, len(sets)):
            if (a, b) not in touching:
                failures.append(f"branch sets {a} and {b} are not adjacent")
    return MinorReport(len(sets), failures)


def _checked(t: TotalGraph, cert: MinorCertificate) -> MinorCertificate:
    report = verify_minor_certificate(t, cert)
    if not report.valid:
        raise MinorConstructionError(f"{cert.provenance} certificate failed verification: "
                                     + "; ".join(report.failures[:5]))
    return cert


def max_degree_vertex(g: Graph) -> int:
    delta = max_degree(g)
    return next(v for v in range(g.n) if g.degree(v) == delta)


# ---------------------------------------------------------------------------
# Spanning-tree packing

@dataclass
class TreePacking:
    trees: list[list[Edge]]


@dataclass
class PartitionWitness:
    """A vertex partition with fewer than ``k(|P|-1)`` cross edges."""

    k: int
    parts: list[list[int]]
    cross_edges: int

    @property
    def required(self) -> int:
        return self.k * (len(self.parts) - 1)


def _forest_path(forest: list[dict[int, int]], s: int, t: int) -> list[int] | None:
    """Edge indices on the s-t path of a forest, or None if s, t are disconnected."""
    if s == t:
        return []
    back = {s: (-1, -1)}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y, e in forest[x].items():
            if y not in back:
                back[y] = (x, e)
                if y == t:
                    path = []
                    while y != s:
                        y, e = back[y]
                        path.append(e)
                    return path
                queue.append(y)
    return None


def edge_disjoint_spanning_trees(g: Graph, k: int) -> TreePacking | PartitionWitness:
    """Pack ``k`` edge-disjoint spanning trees or exhibit a violated partition count.

    Matroid partitioning: edges are offered one by one to ``k`` forests, and
    an edge that fits nowhere triggers a breadth-first search for a shortest
    chain of swaps.  If the forests end up short of ``k(n-1)`` edges, the
    edges reachable from unplaced ones split the vertices into a partition
    with fewer than ``k(|P|-1)`` cross edges.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not is_connected(g):
        raise PreconditionError("tree packing needs a connected graph")
    n, edges = g.n, g.edges
    forests: list[list[dict[int, int]]] = [[{} for _ in range(n)] for _ in range(k)]
    home = [-1] * len(edges)

    def move(e: int, target: int) -> None:
        u, v = edges[e]
        if home[e] >= 0:
            f = forests[home[e]]
            del f[u][v], f[v][u]
        f = forests[target]
        f[u][v] = e
        f[v][u] = e
        home[e] = target

    def explore(sources: list[int]) -> tuple[dict[int, tuple[int, int]], int | None, int | None]:
        label: dict[int, tuple[int, int]] = {s: (-1, -1) for s in sources}
        queue = deque(sources)
        while queue:
            x = queue.popleft()
            u, v = edges[x]
            for i in range(k):
                if i == home[x]:
                    continue
                path = _forest_path(forests[i], u, v)
                if path is None:
                    return label, x, i
                for f in path:
                    if f not in label:
                        label[f] = (x, i)      # x enters forest i, f leaves it
                        queue.append(f)
        return label, None, None

    unplaced = []
    for e in range(len(edges)):
        label, x, i = explore([e])
        if x is None:
            unplaced.append(e)
            continue
        while True:
            prev_home = home[x]
            move(x, i)
            if x == e:
                break
            x, i = label[x]
            if i != prev_home:
                raise InvariantViolation("swap chain is inconsistent")

    trees = [sorted(edges[e] for e in range(len(edges)) if home[e] == i) for i in range(k)]
    if all(len(t) == n - 1 for t in trees):
        return TreePacking(trees)

    label, x, _ = explore(unplaced)
    if x is not None:
        raise InvariantViolation("an unplaced edge became augmentable")
    reached = Graph(n, (edges[e] for e in label))
    parts = connected_components(reached)
    part_of = {v: p for p, part in enumerate(parts) for v in part}
    cross = sum(part_of[u] != part_of[v] for u, v in edges)
    witness = PartitionWitness(k, parts, cross)
    if cross >= witness.required:
        raise InvariantViolation("partition witness does not violate the cross-edge count")
    return witness


def verify_tree_packing(g: Graph, packing: TreePacking) -> list[str]:
    problems = []
    used: set[Edge] = set()
    for i, tree in enumerate(packing.trees):
        es = {canonical_edge(*e) for e in tree}
        if not es <= set(g.edges):
            problems.append(f"tree {i} uses non-edges")
        if len(es) != g.n - 1 or not is_connected(Graph(g.n, es & set(g.edges))):
            problems.append(f"tree {i} is not a spanning tree")
        if used & es:
            problems.append(f"tree {i} shares edges with an earlier tree")
        used |= es
    return problems


# ---------------------------------------------------------------------------
# Constructions

def minor_certificate_from_connectivity(g: Graph, k: int) -> MinorCertificate:
    """Order Delta+k certificate in T(G) for a (2k-1)-connected graph G.

    Branch sets: the e-vertices at a maximum-degree vertex ``x`` (one each),
    the e-vertex sets of ``k-1`` edge-disjoint spanning trees of ``G - x``,
    and the v-vertices of ``G - x``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n < 2:
        raise MinorConstructionError("graph needs at least two vertices")
    kappa = vertex_connectivity(g)
    if kappa < 2 * k - 1:
        raise MinorConstructionError(f"vertex connectivity {kappa} is below 2k-1 = {2 * k - 1}")
    x = max_degree_vertex(g)
    sets: list[list[ElementId]] = [[EVertex(*e)] for e in g.incident_edges(x)]
    h, back = g.remove_vertices([x])
    if k >= 2:
        packing = edge_disjoint_spanning_trees(h, k - 1)
        if not isinstance(packing, TreePacking):
            raise InvariantViolation("no tree packing although connectivity guarantees one")
        for tree in packing.trees:
            sets.append([EVertex(*canonical_edge(back[a], back[b])) for a, b in tree])
    if is_connected(h):
        sets.append([VVertex(back[v]) for v in range(h.n)])
    else:
        # only possible for k = 1: G - x may fall apart, and x itself closes the clique
        sets.append([VVertex(x)])
    cert = MinorCertificate(sets, len(sets), CONNECTIVITY)
    if cert.order != max_degree(g) + k:
        raise InvariantViolation("connectivity certificate has the wrong order")
    return _checked(total_graph(g), cert)


def vertex_star_clique(g: Graph) -> MinorCertificate:
    """The clique of a maximum-degree vertex and its incident edges, as singletons."""
    if g.n == 0:
        raise MinorConstructionError("empty graph")
    x = max_degree_vertex(g)
    sets: list[list[ElementId]] = [[VVertex(x)]] + [[EVertex(*e)] for e in g.incident_edges(x)]
    return _checked(total_graph(g), MinorCertificate(sets, len(sets), CLIQUE))


def minor_from_critical_delta_plus_2(h: Graph) -> MinorCertificate:
    """Order Delta+2 certificate in T(H) for a connected (Delta+2)-total-critical H.

    Branch sets: a maximum-degree vertex, each of its incident edges, and all
    remaining elements of H as one set.  The last set is connected exactly
    when the chosen vertex is not a cut vertex.
    """
    if not is_connected(h) or h.n < 2:
        raise MinorConstructionError("graph must be connected with at least one edge")
    x = max_degree_vertex(h)
    rest: list[ElementId] = [VVertex(v) for v in range(h.n) if v != x]
    rest += [EVertex(*e) for e in h.edges if x not in e]
    sets: list[list[ElementId]] = [[VVertex(x)]] + [[EVertex(*e)] for e in h.incident_edges(x)] + [rest]
    return _checked(total_graph(h), MinorCertificate(sets, len(sets), CRITICAL2))


def minor_from_critical_delta_plus_3(h: Graph, relaxed: bool = False,
                                     max_elements: int = DEFAULT_MAX_ELEMENTS) -> MinorCertificate:
    """Order Delta+3 certificate in T(H) from four branch-set families.

    With ``x`` a maximum-degree vertex and ``w`` its smallest neighbour such
    that ``{x, w}`` does not separate H:

    * ``{x, w}`` as v-vertices;
    * each edge at ``x`` as a singleton e-vertex;
    * the e-vertices of ``H - {x, w}`` plus one edge ``e'`` from ``w`` into it;
    * the v-vertices of ``H - {x, w}`` plus a second such edge ``e''``.

    In strict mode H must be (Delta+3)-total-critical, checked by brute force.
    ``relaxed=True`` only requires H to be 2-connected with minimum degree at
    least 3 and labels the certificate accordingly.
    """
    if not is_connected(h):
        raise MinorConstructionError("graph must be connected")
    delta = max_degree(h)
    x = max_degree_vertex(h)
    if all(h.degree(y) < 3 for y in h.adjacency[x]):
        raise MinorConstructionError("deg(w) < 3 for every neighbour w of the maximum-degree vertex")
    if relaxed:
        if not is_biconnected(h) or min_degree(h) < 3:
            raise MinorConstructionError("relaxed mode needs a 2-connected graph with minimum degree >= 3")
    else:
        if delta < 6:
            raise MinorConstructionError(f"a (Delta+3)-total-critical graph has Delta >= 6, got {delta}")
        if not is_total_critical(h, delta + 3, max_elements):
            raise MinorConstructionError(f"graph is not {delta + 3}-total-critical")
    try:
        w = find_non_separating_neighbor(h, x)
    except PreconditionError as exc:
        raise MinorConstructionError(f"no non-separating neighbour: {exc}") from None
    if h.degree(w) < 3:
        raise MinorConstructionError(f"deg(w) = {h.degree(w)} < 3 for w = {w}")

    outward = sorted(e for e in h.incident_edges(w) if x not in e)
    e1, e2 = EVertex(*outward[0]), EVertex(*outward[1])
    rest_vertices = [v for v in range(h.n) if v not in (x, w)]
    rest_edges = [EVertex(*e) for e in h.edges if x not in e and w not in e]
    sets: list[list[ElementId]] = [[VVertex(x), VVertex(w)]]
    sets += [[EVertex(*e)] for e in h.incident_edges(x)]
    sets.append(rest_edges + [e1])
    sets.append([VVertex(v) for v in rest_vertices] + [e2])
    cert = MinorCertificate(sets, len(sets), CRITICAL3_RELAXED if relaxed else CRITICAL3)
    return _checked(total_graph(h), cert)


# ---------------------------------------------------------------------------
# Criticality

def _guard(g: Graph, max_elements: int) -> None:
    if g.n + g.m > max_elements:
        raise SizeGuardError(f"n+m = {g.n + g.m} exceeds the brute-force limit of {max_elements}")


def is_total_critical(g: Graph, t: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    """chi''(G) = t and deleting any single edge lowers chi''."""
    _guard(g, max_elements)
    if brute_force_total_chromatic(g, max_elements) != t:
        return False
    return all(brute_force_total_chromatic(g.without_edge(*e), max_elements) < t for e in g.edges)


def critical_subgraph_with_map(g: Graph, t: int,
                               max_elements: int = DEFAULT_MAX_ELEMENTS) -> tuple[Graph, list[int]]:
    """Edge-minimal subgraph with chi'' >= t, isolated vertices dropped.

    Returns the subgraph and the map from its vertices to those of ``g``.
    """
    _guard(g, max_elements)
    if brute_force_total_chromatic(g, max_elements) < t:
        raise PreconditionError(f"total chromatic number is below {t}")
    current = g
    for e in g.edges:
        trial = current.without_edge(*e)
        if brute_force_total_chromatic(trial, max_elements) >= t:
            current = trial
    touched = sorted({v for e in current.edges for v in e})
    if not touched:
        # t <= 1: a single vertex already needs one color
        touched = [0]
    return current.induced_subgraph(touched)


def total_critical_subgraph(g: Graph, t: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> Graph:
    return critical_subgraph_with_map(g, t, max_elements)[0]


# ---------------------------------------------------------------------------
# Evidence report

@dataclass
class HadwigerReport:
    total_chromatic: int
    certificate: MinorCertificate
    attempts: dict[str, str]

    @property
    def certificate_order(self) -> int:
        return self.certificate.order

    @property
    def holds(self) -> bool:
        return self.total_chromatic <= self.certificate.order

    def to_json(self) -> dict:
        return {
            "chi_total_graph": self.total_chromatic,
            "certificate_order": self.certificate_order,
            "holds": self.holds,
            "attempts": self.attempts,
            "certificate": self.certificate.to_json(),
        }


def hadwiger_report(g: Graph, max_elements: int = DEFAULT_MAX_ELEMENTS) -> HadwigerReport:
    """Compare chi(T(G)) with the largest certificate the constructions produce."""
    _guard(g, max_elements)
    if g.m == 0:
        raise PreconditionError("graph has no edges")
    chi = brute_force_total_chromatic(g, max_elements)
    t = total_graph(g)
    found: list[MinorCertificate] = []
    attempts: dict[str, str] = {}

    def attempt(name: str, build) -> None:
        try:
            cert = build()
        except (MinorConstructionError, PreconditionError, SizeGuardError) as exc:
            attempts[name] = f"skipped: {exc}"
            return
        if not verify_minor_certificate(t, cert).valid:
            raise InvariantViolation(f"{name} certificate does not verify in T(G)")
        attempts[name] = f"order {cert.order}"
        found.append(cert)

    attempt(CLIQUE, lambda: vertex_star_clique(g))
    kappa = vertex_connectivity(g)
    k = (kappa + 1) // 2
    if k >= 1:
        attempt(CONNECTIVITY, lambda: minor_certificate_from_connectivity(g, k))
    if chi >= max_degree(g) + 2:
        def critical() -> MinorCertificate:
            h, back = critical_subgraph_with_map(g, chi, max_elements)
            if chi == max_degree(h) + 2:
                return minor_from_critical_delta_plus_2(h).relabel(back)
            if chi == max_degree(h) + 3:
                return minor_from_critical_delta_plus_3(h, max_elements=max_elements).relabel(back)
            raise MinorConstructionError(f"critical subgraph has Delta = {max_degree(h)}")
        attempt("critical", critical)
    best = max(found, key=lambda c: c.order)
    return HadwigerReport(chi, best, attempts)


def lemma_counterexamples(g: Graph, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[str]:
    """Check the two structural properties of total-critical graphs on ``g``."""
    if not is_connected(g) or g.m == 0:
        return []
    t = brute_force_total_chromatic(g, max_elements)
    if not is_total_critical(g, t, max_elements):
        return []
    delta = max_degree(g)
    bad = []
    if t >= delta + 2 and cut_vertices(g):
        bad.append(f"{t}-total-critical graph with cut vertices {sorted(cut_vertices(g))}")
    k = t - delta
    if g.n >= 3 and 2 < k <= delta and min_degree(g) < k:
        bad.append(f"{t}-total-critical graph with minimum degree {min_degree(g)} < {k}")
    return bad
