"""Exact harmonic centrality and Freeman harmonic centralization.

The package has three layers: a small simple-graph core with an
edge-list text format, deterministic generators for the classic special
families (path, cycle, fan, wheel, complete bipartite, ladder, crown,
prism, star, book, helm, complete split, complete), and an exact
rational analysis engine.  On top of those sit closed-form evaluations
of the published centralization formulas per family and a verification
harness that sweeps parameters comparing closed forms against the
brute-force engine.
"""
from .graph import Graph, new_graph, parse_edge_list, serialize_edge_list
from .families import (
    FamilySpec,
    Role,
    FAMILY_NAMES,
    generate,
    parse_family_spec,
    vertices_with_role,
)
from .centrality import (
    CentralityReport,
    DistanceRow,
    Rational,
    all_reciprocal_sums,
    bfs_distances,
    centralization,
    centralization_denominator,
    format_decimal,
    format_rational,
    full_report,
    harmonic_centrality,
    harmonic_number,
    reciprocal_sum,
)
from .closed_form import (
    centralization_closed,
    max_centrality_closed,
    vertex_centrality_closed,
    vertex_classes,
)
from .verify import (
    CATERPILLAR_CENTRALITIES,
    CATERPILLAR_CENTRALIZATION,
    CATERPILLAR_DISTANCES_FROM_U,
    VerificationRecord,
    caterpillar_graph,
    distance_oracle_crosscheck,
    floyd_warshall_distances,
    full_sweep,
    golden_fixtures,
    random_simple_graph,
    records_to_csv,
    records_to_json,
    verify_family,
)

__version__ = "0.1.0"
