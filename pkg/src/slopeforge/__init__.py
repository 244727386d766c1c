"""Graph drawings with provably few edge slopes, plus an exact
verification kernel that re-measures every promised bound."""

from .bounds import (
    counting_gap,
    elementary_lower_bounds,
    gap_scan,
    log_count_regular,
    log_count_slopeable,
    log_count_slopeable_exact,
    slope_budget,
)
from .constructions import (
    Certificate,
    CertificateReport,
    ConstructionError,
    HPartition,
    HostDrawingStats,
    bipartite_slope_bounds,
    blow_up,
    draw_balanced_bipartite,
    draw_bandwidth,
    draw_bipartite,
    draw_complete_ngon,
    draw_forest,
    draw_one_bend,
    draw_power2_multipartite,
    draw_tree,
    draw_tree_partitioned,
    host_stats,
    partition_from_json,
    partition_to_json,
    power2_parts,
    subdivide_bends,
    verify_certificate,
)
from .geometry import (
    Drawing,
    GeometryError,
    PolygonAssignment,
    PrecisionError,
    ValidityReport,
    count_crossings,
    count_lengths,
    count_slopes,
    drawing_from_json,
    drawing_to_json,
    drawing_to_svg,
    edge_length_classes,
    edge_slope_classes,
    is_convex_drawing,
    ngon_slope_count,
    realize_ngon,
    slope_of,
    validate_drawing,
)
from .graphs import (
    Graph,
    GraphError,
    GraphParseError,
    PathPartition,
    VertexOrdering,
    bandwidth_exact,
    bandwidth_heuristic,
    connected_components,
    detect_complete_multipartite,
    find_backbone,
    induced_subgraph,
    is_forest,
    is_tree,
    make_complete,
    make_complete_multipartite,
    make_cycle,
    make_grid,
    make_path,
    ordering_from_path_partition,
    ordering_width,
    parse_graph,
    path_partition_from_ordering,
    petersen,
    random_tree,
    serialize_graph,
    tree_pathwidth,
)

__version__ = "0.1.0"
