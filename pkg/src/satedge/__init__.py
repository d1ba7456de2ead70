"""satedge: exact tooling for clique-saturating edge counts.

The package builds the extremal-looking blow-up constructions, counts
saturating edges both brute-force and in closed form, packs disjoint cliques
and analyses the induced vertex partition, searches small graphs exhaustively
for the true minima, and cross-checks every closed form in exact rational
arithmetic.
"""

from .graph import (
    DEFAULT_VERTEX_CAP,
    Graph,
    build_graph,
    contains_clique,
    find_clique,
    format_edge_list,
    from_adjacency,
    graph6_decode,
    graph6_encode,
    parse_edge_list,
)
from .constructions import (
    Blowup,
    BlowupSpec,
    TrimError,
    base_graph,
    blow_up,
    h0,
    h1,
    h2,
    h2_surplus,
    modulus,
    trim_to_target,
    turan_defect,
    turan_graph,
    turan_number,
)
from .saturation import (
    CliquePresentError,
    SaturationReport,
    count_saturating,
    count_saturating_blowup,
    is_saturating,
)
from .formulas import (
    BoundSet,
    bound_set,
    density_threshold_high,
    density_threshold_low,
    exact_minimum_divisible,
    formula_table,
    h1_saturating_count,
    leading_coefficient,
    linear_bracket,
    positivity_sweep,
)
from .packing import (
    BudgetExceededError,
    CliquePacking,
    PackingAnalysis,
    analyze,
    best_r_star,
    certify_remainder_maximal,
    check_switch_inequality,
    make_packing,
    max_packing,
    max_remainder_packing,
    refine_packing,
    ell_split,
    switch,
)
from .search import (
    InfeasibleError,
    SearchResult,
    min_saturating,
    min_saturating_at_jump,
    min_saturating_constrained,
    min_saturating_table,
)
from .verify import (
    CheckReport,
    failures,
    verify_all_small,
    verify_appendices,
    verify_constructions,
    verify_packing_lemmas,
    verify_reduction,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_VERTEX_CAP",
    "Graph",
    "build_graph",
    "contains_clique",
    "find_clique",
    "format_edge_list",
    "from_adjacency",
    "graph6_decode",
    "graph6_encode",
    "parse_edge_list",
    "Blowup",
    "BlowupSpec",
    "TrimError",
    "base_graph",
    "blow_up",
    "h0",
    "h1",
    "h2",
    "h2_surplus",
    "modulus",
    "trim_to_target",
    "turan_defect",
    "turan_graph",
    "turan_number",
    "CliquePresentError",
    "SaturationReport",
    "count_saturating",
    "count_saturating_blowup",
    "is_saturating",
    "BoundSet",
    "bound_set",
    "density_threshold_high",
    "density_threshold_low",
    "exact_minimum_divisible",
    "formula_table",
    "h1_saturating_count",
    "leading_coefficient",
    "linear_bracket",
    "positivity_sweep",
    "BudgetExceededError",
    "CliquePacking",
    "PackingAnalysis",
    "analyze",
    "best_r_star",
    "certify_remainder_maximal",
    "check_switch_inequality",
    "make_packing",
    "max_packing",
    "max_remainder_packing",
    "refine_packing",
    "ell_split",
    "switch",
    "InfeasibleError",
    "SearchResult",
    "min_saturating",
    "min_saturating_at_jump",
    "min_saturating_constrained",
    "min_saturating_table",
    "CheckReport",
    "failures",
    "verify_all_small",
    "verify_appendices",
    "verify_constructions",
    "verify_packing_lemmas",
    "verify_reduction",
    "__version__",
]
