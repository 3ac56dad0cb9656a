from .edge import is_proper_edge_coloring, vizing_edge_coloring
from .oracles import brute_force_total_chromatic, chromatic_index, chromatic_number, clique_number
from .total import (
    ElementColoring,
    TotalColoringReport,
    TotalColoringResult,
    TrailRecord,
    enforce_property_a,
    fix_conflicting_edge,
    initial_coloring,
    shift_invariant_violations,
    verify_total_coloring,
    weak_tcc_total_coloring,
)
from .vertex import exact_vertex_coloring, is_proper_vertex_coloring
