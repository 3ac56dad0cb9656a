"""(Delta+3)-total coloring of 5-colorable graphs by trail color shifting.

Outline of the pipeline run by :func:`weak_tcc_total_coloring`:

1. color the vertices with ``1..5`` and the edges with ``3..Delta+3``
   (a Vizing coloring shifted by two); an edge whose color equals the color
   of an endpoint is *conflicting*, and only colors 3, 4, 5 can conflict;
2. recolor every 5-vertex that carries a 3-edge, a 4-edge and a 5-edge with
   a color from ``6..Delta+3`` it does not see (Property A).  The edge colors
   at this point are frozen as the *original* edge colors;
3. for ``i = 3, 4, 5`` remove the conflicting ``i``-edges one at a time.  An
   edge is either recolored directly with a color of ``A_i = {1..i-1}``
   missing at both ends, or a maximal alternating trail of gamma-edges and
   i-bar-edges is walked from its ``i``-colored endpoint and every color on
   it is shifted one edge back towards the conflicting edge.

Between fixes the coloring satisfies six conditions (vertex colors equal the
frozen ones, proper edge coloring, and four conditions on ``A_i``-edges and
original colors), which :func:`shift_invariant_violations` checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

from ..derived import EVertex, ElementId, VVertex
from ..errors import InvariantViolation, NotColorableError, PreconditionError
from ..graph import Graph, connected_components, max_degree
from .edge import is_proper_edge_coloring, vizing_edge_coloring
from .vertex import DEFAULT_BUDGET, exact_vertex_coloring, is_proper_vertex_coloring

GAMMA = "Gamma"
IBAR = "IBar"


@dataclass
class ElementColoring:
    """Colors of the vertices and edges of ``graph``; edges are indexed by rank.

    ``original_edge_color`` is ``None`` until :meth:`freeze_original` is
    called, after which it never changes.
    """

    graph: Graph
    vertex_color: list[int]
    edge_color: list[int]
    original_edge_color: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.vertex_color) != self.graph.n or len(self.edge_color) != self.graph.m:
            raise ValueError("coloring size does not match the graph")

    def copy(self) -> ElementColoring:
        return ElementColoring(self.graph, list(self.vertex_color), list(self.edge_color),
                               self.original_edge_color)

    def freeze_original(self) -> None:
        if self.original_edge_color is not None:
            raise ValueError("original edge colors are already frozen")
        self.original_edge_color = tuple(self.edge_color)

    def color_of(self, u: int, v: int) -> int:
        return self.edge_color[self.graph.edge_rank(u, v)]

    def seen(self, v: int) -> set[int]:
        """Color of ``v`` together with the colors of its incident edges."""
        g = self.graph
        s = {self.vertex_color[v]}
        s.update(self.edge_color[g.edge_rank(v, u)] for u in g.adjacency[v])
        return s

    def conflicting_edges(self) -> list[int]:
        vc = self.vertex_color
        return [r for r, (u, v) in enumerate(self.graph.edges)
                if self.edge_color[r] in (vc[u], vc[v])]

    def colors(self) -> set[int]:
        return set(self.vertex_color) | set(self.edge_color)

    def max_color(self) -> int:
        return max(self.colors(), default=0)

    def to_json(self) -> dict:
        edges = self.graph.edges
        out = {
            "vertex_colors": list(self.vertex_color),
            "edge_colors": [{"u": u, "v": v, "color": c} for (u, v), c in zip(edges, self.edge_color)],
        }
        if self.original_edge_color is not None:
            out["original_edge_colors"] = [{"u": u, "v": v, "color": c}
                                           for (u, v), c in zip(edges, self.original_edge_color)]
        else:
            out["original_edge_colors"] = []
        return out

    @classmethod
    def from_json(cls, graph: Graph, obj: dict) -> ElementColoring:
        try:
            vertex = [int(c) for c in obj["vertex_colors"]]
            edge = _edge_table(graph, obj["edge_colors"], "edge_colors")
            orig_raw = obj.get("original_edge_colors") or []
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed coloring JSON: {exc}") from None
        orig = tuple(_edge_table(graph, orig_raw, "original_edge_colors")) if orig_raw else None
        if len(vertex) != graph.n:
            raise ValueError(f"vertex_colors has {len(vertex)} entries, graph has {graph.n} vertices")
        return cls(graph, vertex, edge, orig)


def _edge_table(graph: Graph, entries: list[dict], name: str) -> list[int]:
    table = [0] * graph.m
    for item in entries:
        u, v = int(item["u"]), int(item["v"])
        if not graph.has_edge(u, v):
            raise ValueError(f"{name}: ({u}, {v}) is not an edge of the graph")
        table[graph.edge_rank(u, v)] = int(item["color"])
    if len(entries) != graph.m or 0 in table:
        raise ValueError(f"{name} must list every edge exactly once")
    return table


@dataclass
class TrailRecord:
    """One color shift along a maximal (Gamma, I-bar)-trail.

    ``vertices`` is ``v0, v1, ..., vk``: ``v0 v1`` is the conflicting edge and
    ``edge_kinds[j]`` tags the trail edge ``v_{j+1} v_{j+2}``.
    """

    phase: int
    gamma: int
    vertices: list[int]
    edge_kinds: list[str]
    terminal_rule: str          # "ibar_gets_gamma" or "gamma_gets_free"
    terminal_color: int

    def to_json(self) -> dict:
        return {
            "phase": self.phase,
            "gamma": self.gamma,
            "vertices": self.vertices,
            "edge_kinds": self.edge_kinds,
            "terminal_rule": self.terminal_rule,
            "terminal_color": self.terminal_color,
        }


@dataclass
class TotalColoringReport:
    colors_used: int
    max_color: int
    violations: list[tuple[ElementId, ElementId]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "colors_used": self.colors_used,
            "max_color": self.max_color,
            "violations": [[a.to_json(), b.to_json()] for a, b in self.violations],
        }


class TotalColoringResult(NamedTuple):
    coloring: ElementColoring
    report: TotalColoringReport
    trails: list[TrailRecord]
    stats: dict


# ---------------------------------------------------------------------------
# Verification

def verify_total_coloring(g: Graph, c: ElementColoring) -> TotalColoringReport:
    """List every pair of adjacent or incident elements that share a color."""
    vc, ec = c.vertex_color, c.edge_color
    if any(x is None or x <= 0 for x in vc) or any(x is None or x <= 0 for x in ec):
        raise PreconditionError("every vertex and edge must carry a positive color")
    violations: list[tuple[ElementId, ElementId]] = []
    for r, (u, v) in enumerate(g.edges):
        if vc[u] == vc[v]:
            violations.append((VVertex(u), VVertex(v)))
        if ec[r] == vc[u]:
            violations.append((VVertex(u), EVertex(u, v)))
        if ec[r] == vc[v]:
            violations.append((VVertex(v), EVertex(u, v)))
    for w in range(g.n):
        by_color: dict[int, int] = {}
        for x in g.adjacency[w]:
            r = g.edge_rank(w, x)
            if ec[r] in by_color:
                a, b = g.edges[by_color[ec[r]]], g.edges[r]
                violations.append((EVertex(*a), EVertex(*b)))
            else:
                by_color[ec[r]] = r
    palette = c.colors()
    return TotalColoringReport(len(palette), max(palette, default=0), violations)


# ---------------------------------------------------------------------------
# Initial coloring and Property A

def initial_coloring(g: Graph, vcol: list[int], ecol: list[int]) -> ElementColoring:
    """Vertex colors from ``vcol`` (in ``1..5``), edge colors ``ecol + 2``.

    ``ecol`` must be a proper edge coloring with colors in ``1..Delta+1``.
    """
    delta = max_degree(g)
    if len(vcol) != g.n or not all(1 <= c <= 5 for c in vcol):
        raise PreconditionError("vertex coloring must assign a color in 1..5 to every vertex")
    if not is_proper_vertex_coloring(g, vcol):
        raise PreconditionError("vertex coloring is not proper")
    if len(ecol) != g.m or not all(1 <= c <= delta + 1 for c in ecol):
        raise PreconditionError(f"edge coloring must use colors in 1..{delta + 1}")
    if not is_proper_edge_coloring(g, ecol):
        raise PreconditionError("edge coloring is not proper")
    alpha = ElementColoring(g, list(vcol), [c + 2 for c in ecol])
    for r in alpha.conflicting_edges():
        if alpha.edge_color[r] not in (3, 4, 5):
            raise InvariantViolation(f"conflict outside 3..5 on edge {g.edges[r]}")
    return alpha


def violates_property_a(c: ElementColoring, v: int) -> bool:
    if c.vertex_color[v] != 5:
        return False
    g = c.graph
    around = {c.edge_color[g.edge_rank(v, u)] for u in g.adjacency[v]}
    return {3, 4, 5} <= around


def enforce_property_a(alpha: ElementColoring) -> ElementColoring:
    """Recolor offending 5-vertices with their lowest unseen color in ``6..Delta+3``.

    Edge colors are untouched and become the frozen original colors.
    """
    g = alpha.graph
    delta = max_degree(g)
    pi = ElementColoring(g, list(alpha.vertex_color), list(alpha.edge_color))
    for v in range(g.n):
        if violates_property_a(pi, v):
            seen = pi.seen(v)
            spare = next((c for c in range(6, delta + 4) if c not in seen), None)
            if spare is None:
                raise InvariantViolation(f"no unseen color in 6..{delta + 3} at vertex {v}")
            pi.vertex_color[v] = spare
    if any(violates_property_a(pi, v) for v in range(g.n)):
        raise InvariantViolation("Property A still violated after repair")
    pi.freeze_original()
    return pi


# ---------------------------------------------------------------------------
# Shift invariants

def shift_invariant_violations(phi: ElementColoring, pi_vertex: list[int] | tuple[int, ...], i: int) -> list[str]:
    """Conditions (a)-(f) that must hold around every fix in phase ``i``.

    Returns a human-readable line per violated condition instance.
    """
    g = phi.graph
    orig = phi.original_edge_color
    if orig is None:
        raise ValueError("coloring has no frozen original edge colors")
    problems = []
    vc, ec = phi.vertex_color, phi.edge_color
    if list(vc) != list(pi_vertex):
        problems.append("(a) vertex colors differ from the original coloring")
    if not is_proper_edge_coloring(g, ec):
        problems.append("(b) edge coloring is not proper")
    for r, (u, v) in enumerate(g.edges):
        c = ec[r]
        if not 1 <= c < i:
            if c == i and i in (vc[u], vc[v]) and orig[r] != i:
                problems.append(f"(f) conflicting {i}-edge {g.edges[r]} has original color {orig[r]}")
            continue
        if c in (vc[u], vc[v]):
            problems.append(f"(c) A_{i}-edge {g.edges[r]} is conflicting")
        if not 3 <= orig[r] <= i:
            problems.append(f"(d) A_{i}-edge {g.edges[r]} has original color {orig[r]}")
        if orig[r] == i and i not in (vc[u], vc[v]):
            problems.append(f"(e) A_{i}-edge {g.edges[r]} of original color {i} has no {i}-endpoint")
    return problems


class ShiftRecoloring:
    """Mutable state for removing conflicting edges phase by phase.

    With ``check=True`` the six shift invariants, the trail properties and
    strict progress are asserted around every single fix.
    """

    def __init__(self, pi: ElementColoring, check: bool = False):
        if pi.original_edge_color is None:
            raise ValueError("start coloring must have frozen original edge colors")
        g = pi.graph
        self.graph = g
        self.check = check
        self.pi_vertex = tuple(pi.vertex_color)
        self.phi = pi.copy()
        self.orig = pi.original_edge_color
        self.at: list[dict[int, int]] = [{} for _ in range(g.n)]      # current color -> edge rank
        self.orig_at: list[dict[int, int]] = [{} for _ in range(g.n)]  # original color -> edge rank
        for r, (u, v) in enumerate(g.edges):
            for x in (u, v):
                self.at[x][self.phi.edge_color[r]] = r
                self.orig_at[x][self.orig[r]] = r
        self.trails: list[TrailRecord] = []
        self.fixes = 0
        self.fast_fixes = 0
        self.initial_conflicts = len(self.phi.conflicting_edges())

    def _other(self, r: int, x: int) -> int:
        u, v = self.graph.edges[r]
        return v if x == u else u

    def _seen(self, v: int) -> set[int]:
        s = set(self.at[v])
        s.add(self.phi.vertex_color[v])
        return s

    def _apply(self, new_colors: dict[int, int]) -> None:
        ec = self.phi.edge_color
        edges = self.graph.edges
        for r in new_colors:
            for x in edges[r]:
                del self.at[x][ec[r]]
        for r, c in new_colors.items():
            ec[r] = c
            for x in edges[r]:
                if c in self.at[x]:
                    raise InvariantViolation(f"color {c} repeated at vertex {x}")
                self.at[x][c] = r

    def conflicting(self, i: int) -> list[int]:
        vc, ec = self.phi.vertex_color, self.phi.edge_color
        return [r for r, (u, v) in enumerate(self.graph.edges)
                if ec[r] == i and i in (vc[u], vc[v])]

    def assert_invariants(self, i: int) -> None:
        problems = shift_invariant_violations(self.phi, self.pi_vertex, i)
        if problems:
            raise InvariantViolation(f"phase {i}: " + "; ".join(problems))

    def fix(self, i: int, r: int) -> TrailRecord | None:
        """Make edge ``r``, a conflicting ``i``-edge, non-conflicting."""
        g = self.graph
        vc, ec = self.phi.vertex_color, self.phi.edge_color
        u, v = g.edges[r]
        if ec[r] != i or i not in (vc[u], vc[v]):
            raise PreconditionError(f"edge {g.edges[r]} is not a conflicting {i}-edge")
        if self.orig[r] != i:
            raise InvariantViolation(f"conflicting {i}-edge {g.edges[r]} has original color {self.orig[r]}")
        before = self.conflicting(i) if self.check else None
        v0, v1 = (u, v) if vc[v] == i else (v, u)
        palette = range(1, i)
        s0, s1 = self._seen(v0), self._seen(v1)

        record = None
        direct = next((c for c in palette if c not in s0 and c not in s1), None)
        if direct is not None:
            self._apply({r: direct})
            self.fast_fixes += 1
        else:
            record = self._shift_along_trail(i, r, v0, v1, s0)
            self.trails.append(record)
        self.fixes += 1

        if self.check:
            self.assert_invariants(i)
            after = self.conflicting(i)
            if set(after) != set(before) - {r}:
                raise InvariantViolation(f"fix of {g.edges[r]} did not remove exactly that conflict")
            if self.fixes > self.initial_conflicts:
                raise InvariantViolation("more fixes than initial conflicts")
        return record

    def _shift_along_trail(self, i: int, r: int, v0: int, v1: int, s0: set[int]) -> TrailRecord:
        ec = self.phi.edge_color
        vc = self.phi.vertex_color
        gamma = next((c for c in range(1, i) if c not in s0), None)
        if gamma is None:
            raise InvariantViolation(f"no gamma in A_{i} missing at v0={v0}")

        vertices = [v0, v1]
        ranks = [r]
        kinds: list[str] = []
        on_path = {v0, v1}
        cur = v1
        while True:
            if len(vertices) % 2 == 0:           # cur = v_t with t odd: continue on a gamma-edge
                if vc[cur] != i:
                    raise InvariantViolation(f"odd trail vertex {cur} is not colored {i}")
                nxt = self.at[cur].get(gamma)
                kind = GAMMA
            else:                                 # t even: continue on an i-bar-edge
                cand = self.orig_at[cur].get(i)
                nxt = cand if cand is not None and cand != ranks[-1] and ec[cand] < i and ec[cand] != gamma else None
                kind = IBAR
            if self.check:
                self._assert_unique_continuation(cur, ranks[-1], kind, gamma, i)
            if nxt is None:
                break
            w = self._other(nxt, cur)
            if w in on_path:
                raise InvariantViolation(f"trail revisits vertex {w}")
            on_path.add(w)
            vertices.append(w)
            ranks.append(nxt)
            kinds.append(kind)
            cur = w
        if not kinds:
            raise InvariantViolation(f"v1={v1} has no gamma-edge although gamma={gamma} is seen there")

        new_colors = {ranks[t - 1]: ec[ranks[t]] for t in range(1, len(ranks))}
        if kinds[-1] == IBAR:
            rule, last = "ibar_gets_gamma", gamma
        else:
            seen_end = self._seen(cur)
            last = next((c for c in range(1, i) if c not in seen_end), None)
            if last is None:
                raise InvariantViolation(f"trail end {cur} sees all of A_{i}")
            rule = "gamma_gets_free"
        new_colors[ranks[-1]] = last
        self._apply(new_colors)
        return TrailRecord(i, gamma, vertices, kinds, rule, last)

    def _assert_unique_continuation(self, cur: int, incoming: int, kind: str, gamma: int, i: int) -> None:
        g = self.graph
        ec = self.phi.edge_color
        count = 0
        for x in g.adjacency[cur]:
            e = g.edge_rank(cur, x)
            if e == incoming:
                continue
            if kind == GAMMA and ec[e] == gamma:
                count += 1
            elif kind == IBAR and self.orig[e] == i and ec[e] < i and ec[e] != gamma:
                count += 1
        if count > 1:
            raise InvariantViolation(f"ambiguous {kind} continuation at vertex {cur}")

    def run_phase(self, i: int) -> None:
        if self.check:
            self.assert_invariants(i)
        vc, ec = self.phi.vertex_color, self.phi.edge_color
        for r in self.conflicting(i):
            u, v = self.graph.edges[r]
            if ec[r] != i or i not in (vc[u], vc[v]):
                raise InvariantViolation(f"conflict on {self.graph.edges[r]} vanished before its fix")
            self.fix(i, r)
        if self.conflicting(i):
            raise InvariantViolation(f"conflicting {i}-edges remain after phase {i}")

    def run(self) -> ElementColoring:
        for i in (3, 4, 5):
            self.run_phase(i)
            if tuple(self.phi.vertex_color) != self.pi_vertex:
                raise InvariantViolation("vertex colors changed during recoloring")
            if self.check:
                frozen = ElementColoring(self.graph, list(self.pi_vertex), list(self.orig))
                if any(violates_property_a(frozen, v) for v in range(self.graph.n)):
                    raise InvariantViolation(f"Property A violated after phase {i}")
        if self.phi.conflicting_edges():
            raise InvariantViolation("conflicts remain after all phases")
        return self.phi


def fix_conflicting_edge(phi: ElementColoring, i: int, e: tuple[int, int]) -> tuple[ElementColoring, TrailRecord | None]:
    """Functional single-fix entry point; validates the invariants on both sides.

    ``phi`` must carry frozen original edge colors; its vertex colors are
    taken as the frozen vertex colors.
    """
    if i not in (3, 4, 5):
        raise ValueError("phase color must be 3, 4 or 5")
    engine = ShiftRecoloring(phi, check=True)
    engine.assert_invariants(i)
    record = engine.fix(i, phi.graph.edge_rank(*e))
    return engine.phi, record


# ---------------------------------------------------------------------------
# Full pipeline

def _compact(colors: list[int]) -> list[int]:
    relabel = {c: k for k, c in enumerate(sorted(set(colors)), start=1)}
    return [relabel[c] for c in colors]


def weak_tcc_total_coloring(
    g: Graph,
    vertex_coloring: list[int] | None = None,
    *,
    check_invariants: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> TotalColoringResult:
    """Total coloring of a 5-colorable graph with colors in ``1..Delta+3``.

    ``vertex_coloring`` is an optional proper coloring with colors ``1..5``;
    without it an exact 5-coloring is searched for within ``budget`` nodes.
    Components are processed independently and merged.

    Raises :class:`NotColorableError` when the search proves the graph is not
    5-colorable and :class:`BudgetExceededError` when it gives up.
    """
    if vertex_coloring is not None:
        if len(vertex_coloring) != g.n or not all(1 <= c <= 5 for c in vertex_coloring):
            raise PreconditionError("external vertex coloring must use colors 1..5 on every vertex")
        if not is_proper_vertex_coloring(g, vertex_coloring):
            raise PreconditionError("external vertex coloring is not proper")

    vcol = [0] * g.n
    ecol = [0] * g.m
    orig = [0] * g.m
    trails: list[TrailRecord] = []
    stats = {"components": 0, "initial_conflicts": 0, "fixes": 0, "fast_fixes": 0,
             "trail_fixes": 0, "property_a_recolored": 0}
    for comp in connected_components(g):
        sub, back = g.induced_subgraph(comp)
        stats["components"] += 1
        if vertex_coloring is not None:
            sub_v = [vertex_coloring[x] for x in back]
        else:
            sub_v = exact_vertex_coloring(sub, 5, budget)
            if sub_v is None:
                raise NotColorableError("exhaustive search found no proper 5-coloring")
        if max(sub_v) > max_degree(sub) + 3:
            # only reachable when Delta <= 1; such components need at most two vertex colors
            sub_v = _compact(sub_v)
        alpha = initial_coloring(sub, sub_v, vizing_edge_coloring(sub))
        pi = enforce_property_a(alpha)
        stats["property_a_recolored"] += sum(a != b for a, b in zip(alpha.vertex_color, pi.vertex_color))
        engine = ShiftRecoloring(pi, check=check_invariants)
        psi = engine.run()
        stats["initial_conflicts"] += engine.initial_conflicts
        stats["fixes"] += engine.fixes
        stats["fast_fixes"] += engine.fast_fixes
        stats["trail_fixes"] += len(engine.trails)
        for rec in engine.trails:
            rec.vertices = [back[x] for x in rec.vertices]
        trails.extend(engine.trails)
        for x, c in zip(back, psi.vertex_color):
            vcol[x] = c
        for r, (a, b) in enumerate(sub.edges):
            R = g.edge_rank(back[a], back[b])
            ecol[R] = psi.edge_color[r]
            orig[R] = pi.original_edge_color[r]

    coloring = ElementColoring(g, vcol, ecol, tuple(orig))
    report = verify_total_coloring(g, coloring)
    if not report.valid:
        raise InvariantViolation(f"engine produced an invalid total coloring: {report.violations[:3]}")
    return TotalColoringResult(coloring, report, trails, stats)


def trails_to_json(trails: list[TrailRecord]) -> str:
    return json.dumps([t.to_json() for t in trails], indent=2)
