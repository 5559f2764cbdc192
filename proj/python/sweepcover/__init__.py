"""Sweep-cover enumeration and counting on rooted trees."""

from ._sweepcover import (
    SweepcoverError,
    Tree,
    all_sweep_covers,
    brute_force_covers,
    build_ild_truncated,
    catalan,
    count_nonsingleton,
    depth,
    embedding_tree,
    find_sweep_covers,
    induced_subgraphs,
    linear_path_from,
    lowest_known_descendant,
    max_cover_size,
    p_count,
    p_table,
    parse_tree,
    raney,
    raney_bound_report,
    read_tree_file,
    run_cli,
    stirling2,
    swap_children,
    validate,
)

__all__ = [
    "SweepcoverError",
    "Tree",
    "all_sweep_covers",
    "brute_force_covers",
    "build_ild_truncated",
    "catalan",
    "count_nonsingleton",
    "depth",
    "embedding_tree",
    "find_sweep_covers",
    "induced_subgraphs",
    "linear_path_from",
    "lowest_known_descendant",
    "max_cover_size",
    "p_count",
    "p_table",
    "parse_tree",
    "raney",
    "raney_bound_report",
    "read_tree_file",
    "run_cli",
    "stirling2",
    "swap_children",
    "validate",
]
