"""Total graphs: derived-graph constructions, (Delta+3)-total coloring of
5-colorable graphs, and verified clique-minor certificates."""

from .coloring import (
    ElementColoring,
    brute_force_total_chromatic,
    exact_vertex_coloring,
    fix_conflicting_edge,
    verify_total_coloring,
    vizing_edge_coloring,
    weak_tcc_total_coloring,
)
from .derived import EVertex, TotalGraph, VVertex, line_graph, square, subdivision, total_graph
from .errors import (
    BudgetExceededError,
    GraphFormatError,
    InvariantViolation,
    MinorConstructionError,
    NotColorableError,
    PreconditionError,
    SizeGuardError,
)
from .graph import Graph, parse_graph, write_graph
from .minors import (
    MinorCertificate,
    TreePacking,
    edge_disjoint_spanning_trees,
    hadwiger_report,
    is_total_critical,
    minor_certificate_from_connectivity,
    minor_from_critical_delta_plus_2,
    minor_from_critical_delta_plus_3,
    total_critical_subgraph,
    verify_minor_certificate,
)

__version__ = "0.1.0"
