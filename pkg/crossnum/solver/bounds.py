"""
Euler/girth lower bound on the crossing number.

A planar simple graph with n ≥ 3 vertices and girth g has at most
g/(g-2)·(n-2) edges, and removing one edge per crossing leaves a planar graph
of girth at least g. Crossing numbers add up over biconnected blocks, so the
bound is taken block by block.
"""

import math
from fractions import Fraction

import networkx as nx

from ..graphs.multigraph import MultiGraph


def lower_bound(graph: MultiGraph, girth_aware: bool = True) -> int:
    """
    Lower bound on cr(G) from the simplified graph.

    Args:
        graph: input multigraph
        girth_aware: use each block's girth; False assumes g = 3 (cheaper)

    Returns:
        Sum over blocks of max(0, ceil(m - g/(g-2)·(n-2)))
    """
    return simple_lower_bound(graph.simple_view(), girth_aware)


def simple_lower_bound(simple: nx.Graph, girth_aware: bool = True) -> int:
    total = 0
    for block in nx.biconnected_components(simple):
        sub = simple.subgraph(block)
        n, m = sub.number_of_nodes(), sub.number_of_edges()
        if m < 3:
            continue
        g = 3
        if girth_aware:
            g = min(len(cycle) for cycle in nx.minimum_cycle_basis(sub))
        bound = m - Fraction(g, g - 2) * (n - 2)
        total += max(0, math.ceil(bound))
    return total
