"""
Standard graph families used by tests, the CLI and the benchmarks.
"""

import random
from typing import Optional

import networkx as nx

from .multigraph import MultiGraph


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph.from_networkx(nx.complete_graph(n))


def complete_bipartite_graph(a: int, b: int) -> MultiGraph:
    return MultiGraph.from_networkx(nx.complete_bipartite_graph(a, b))


def cycle_graph(n: int) -> MultiGraph:
    return MultiGraph.from_networkx(nx.cycle_graph(n))


def path_graph(n: int) -> MultiGraph:
    return MultiGraph.from_networkx(nx.path_graph(n))


def petersen_graph() -> MultiGraph:
    return MultiGraph.from_networkx(nx.petersen_graph())


def random_multigraph(n: int, m: int, seed: Optional[int] = None) -> MultiGraph:
    """
    Random loop-free multigraph with n vertices and m edges.

    Endpoints are drawn uniformly with replacement, so parallel edges occur.

    Args:
        n: number of vertices (at least 2 when m > 0)
        m: number of edges
        seed: seed for random.Random

    Returns:
        MultiGraph on vertices 0..n-1
    """
    rng = random.Random(seed)
    pairs = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        pairs.append((u, v))
    return MultiGraph.from_pairs(n, pairs)
