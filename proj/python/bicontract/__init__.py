"""Bipartite contraction and cheap 2-coloring solvers."""

from ._bicontract import (
    BicontractError,
    Graph,
    brute_force_coloring,
    brute_force_contraction,
    check_witness,
    coloring_cost,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_grid,
    gen_path,
    gen_petersen,
    gen_random,
    gen_random_bipartite,
    gen_star,
    important_sets,
    parse_graph,
    parse_graph_file,
    read_graph,
    reduce_edge_bipartization,
    serialize_graph,
    solve,
    solve_cheap_coloring,
    solve_extension,
    tree_decomposition,
    treewidth_upper_bound,
)

__all__ = [
    "BicontractError",
    "Graph",
    "brute_force_coloring",
    "brute_force_contraction",
    "check_witness",
    "coloring_cost",
    "gen_complete",
    "gen_complete_bipartite",
    "gen_cycle",
    "gen_grid",
    "gen_path",
    "gen_petersen",
    "gen_random",
    "gen_random_bipartite",
    "gen_star",
    "important_sets",
    "parse_graph",
    "parse_graph_file",
    "read_graph",
    "reduce_edge_bipartization",
    "serialize_graph",
    "solve",
    "solve_cheap_coloring",
    "solve_extension",
    "tree_decomposition",
    "treewidth_upper_bound",
]
