"""Graphs package initialization"""

from .multigraph import MultiGraph
from .surgery import (
    CrossedPair,
    CrossedSequence,
    Contraction,
    Subdivision,
    contract_connected,
    crossed_pair,
    crossed_sequence,
    girth,
    h_components,
    subdivide,
    uncross,
)
from .kernel import Kernel, kernelize
from .homeomorphism import SearchStatus, find_subdivision
from .io import dump_graph, format_edge_list, load_graph, parse_edge_list
from .families import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_multigraph,
)

__all__ = [
    "MultiGraph",
    "CrossedPair",
    "CrossedSequence",
    "Contraction",
    "Subdivision",
    "contract_connected",
    "crossed_pair",
    "crossed_sequence",
    "girth",
    "h_components",
    "subdivide",
    "uncross",
    "Kernel",
    "kernelize",
    "SearchStatus",
    "find_subdivision",
    "dump_graph",
    "format_edge_list",
    "load_graph",
    "parse_edge_list",
    "complete_bipartite_graph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "petersen_graph",
    "random_multigraph",
]
