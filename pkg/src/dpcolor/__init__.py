"""DP-coloring (correspondence coloring) of graphs and multigraphs."""
from .cover import Cover, Transversal, cover_from_lists, full_cover, validate_cover
from .graph import Graph, line_graph, line_multigraph, parse_graph
from .solver import chi_dp, chi_dp_edge, count_transversals, find_transversal, is_dp_colorable

__all__ = [
    "Cover", "Transversal", "cover_from_lists", "full_cover", "validate_cover",
    "Graph", "line_graph", "line_multigraph", "parse_graph",
    "chi_dp", "chi_dp_edge", "count_transversals", "find_transversal", "is_dp_colorable",
]
