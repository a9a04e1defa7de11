"""Exact solvers and checkers for multigraph edge colorings and palettes."""

from ._core import (
    CheckLine,
    ChiPrimeSResult,
    ChromaticIndexResult,
    EdgeColoring,
    ForestCheck,
    GDeltaGraph,
    GDeltaTilde,
    HGraph,
    IntervalBoundReport,
    IntervalReport,
    IntervalSearchResult,
    MinPalettesResult,
    Multigraph,
    PaletteIndexResult,
    PaletteMultigraph,
    SuiteResult,
    average_degree,
    build_palette_multigraph,
    check_interval_bound,
    chi_prime_s,
    chromatic_index,
    complete,
    complete_bipartite,
    cycle,
    degree_diversity_lower_bound,
    disjoint_union,
    distinct_palettes,
    find_interval_coloring,
    g_delta,
    g_delta_tilde,
    gdelta_bounds,
    h_delta_t,
    interval_palette_bound,
    is_cyclic_interval_coloring,
    is_interval_coloring,
    is_proper,
    is_simple_forest,
    lobe,
    min_palettes_with_k_colors,
    named_small_graphs,
    palette_degree,
    palette_graph_dot,
    palette_index,
    palette_index_union,
    palette_of,
    parse_color_matrix,
    parse_coloring,
    parse_multigraph,
    path,
    random_multigraph,
    random_proper_coloring,
    random_tree,
    relabel_colors,
    remove_palette,
    run_suite,
    serialize_coloring,
    serialize_multigraph,
    star,
    strip_unused_colors,
    suite_names,
    to_dot,
    trivial_palette_upper_bound,
    used_colors,
    windmill,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
