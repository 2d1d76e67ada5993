"""Gallai colorings and Ramsey-type verification for stars with extra matched edges."""

from gallai_ramsey.bounds import (
    BoundValue,
    gr_S62,
    gr_S82,
    gr_St2_bounds,
    gr_Str_bounds,
    ramsey_Str,
)
from gallai_ramsey.colored_graph import (
    ColoredCompleteGraph,
    ColorNeighborhood,
    GraphParseError,
    ParameterError,
    blowup_pentagon,
    color_neighborhood,
    edge_color,
    induced_subgraph,
    join,
    new_monochromatic,
    read_graph,
    set_edge_color,
    substitute_part,
    write_graph,
)
from gallai_ramsey.constructions import (
    ConstructionError,
    ConstructionReport,
    build_G62,
    build_G82,
    build_general_lower,
    matched_clique,
    predicted_g62_order,
    predicted_g82_order,
    predicted_general_order,
    two_clique_witness,
)
from gallai_ramsey.gallai import (
    GallaiPartition,
    PartitionCheck,
    ReducedGraph,
    coarsest_partition_over_pairs,
    find_gallai_partition,
    format_partition_report,
    reduced_graph,
    verify_gallai_partition,
)
from gallai_ramsey.patterns import (
    RainbowTriangle,
    SPattern,
    SWitness,
    brute_force_contains_S,
    find_mono_S,
    find_mono_fan,
    find_rainbow_triangle,
    matching_edges_at_least,
    max_matching_size,
)
from gallai_ramsey.search import (
    SearchBudget,
    SearchOutcome,
    VerificationReport,
    all_pattern_free_colorings,
    exhaustive_witness_search,
    random_gallai_sampler,
    verify_construction,
)

__all__ = [
    "BoundValue",
    "ColoredCompleteGraph",
    "ColorNeighborhood",
    "ConstructionError",
    "ConstructionReport",
    "GallaiPartition",
    "GraphParseError",
    "ParameterError",
    "PartitionCheck",
    "RainbowTriangle",
    "ReducedGraph",
    "SPattern",
    "SWitness",
    "SearchBudget",
    "SearchOutcome",
    "VerificationReport",
    "all_pattern_free_colorings",
    "blowup_pentagon",
    "build_G62",
    "build_G82",
    "build_general_lower",
    "brute_force_contains_S",
    "coarsest_partition_over_pairs",
    "color_neighborhood",
    "edge_color",
    "exhaustive_witness_search",
    "find_gallai_partition",
    "find_mono_S",
    "find_mono_fan",
    "find_rainbow_triangle",
    "format_partition_report",
    "gr_S62",
    "gr_S82",
    "gr_St2_bounds",
    "gr_Str_bounds",
    "induced_subgraph",
    "join",
    "matched_clique",
    "matching_edges_at_least",
    "max_matching_size",
    "new_monochromatic",
    "predicted_g62_order",
    "predicted_g82_order",
    "predicted_general_order",
    "ramsey_Str",
    "random_gallai_sampler",
    "read_graph",
    "reduced_graph",
    "set_edge_color",
    "substitute_part",
    "two_clique_witness",
    "verify_construction",
    "verify_gallai_partition",
    "write_graph",
]
