"""Dense graphs of girth at least five: constructions, exact small cases, certificates."""

from .analysis import bounds_report, degree_profile, path2_certificate, remark_probe, sweep
from .augment import (
    apply_plan,
    build_plan,
    dense_girth5,
    greedy_add,
    rewire_degree4,
    select_pivot,
)
from .bipartite import z_lower_construct, z_upper
from .exact import SearchConfig, exact_ex, exact_z, verify_small_table
from .finite_geometry import incidence_graph, make_field, projective_points
from .graph import (
    Graph,
    admissible_edge,
    check_P1,
    check_P2,
    common_neighbors,
    count_paths2,
    girth,
    graph6_decode,
    graph6_encode,
    is_girth5_free,
)

__version__ = "0.1.0"
