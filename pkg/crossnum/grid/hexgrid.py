"""
Hexagonal grids H_r with principal cycles C_1 (innermost) .. C_r.

Construction: ring C_i has 6(2i-1) vertices split into six sides of 2i-1
positions. Along a side the positions alternate out, in, out, ... starting
and ending with out, so a side has i "out" and i-1 "in" positions. The t-th
out position of side s on C_i is joined by a spoke to the t-th in position
of side s on C_{i+1}. This gives 6r² vertices and 9r²-3r edges; exactly the
6r out positions of C_r have degree 2.

Vertex ids: 6(i-1)² + s(2i-1) + p. Ring edges (ring by ring) come first in the
edge id range, spokes (level by level) after them.
"""

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Tuple

from ..errors import GraphError
from ..graphs.multigraph import MultiGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HexGrid:
    """H_r together with its principal cycles"""

    radius: int
    graph: MultiGraph
    cycles: Tuple[Tuple[int, ...], ...]
    cycle_edges: Tuple[Tuple[int, ...], ...]
    # spokes[i-1] joins C_i to C_{i+1}
    spokes: Tuple[Tuple[int, ...], ...]

    def cycle(self, i: int) -> Tuple[int, ...]:
        """Vertex sequence of C_i (1-based)"""
        self._check_level(i)
        return self.cycles[i - 1]

    def ring_of(self, v: int) -> int:
        """Index i of the principal cycle containing grid vertex v"""
        for i, cycle in enumerate(self.cycles, start=1):
            if cycle[0] <= v <= cycle[-1]:
                return i
        raise GraphError(f"vertex {v} is not a vertex of H_{self.radius}")

    def subgrid_vertices(self, i: int) -> FrozenSet[int]:
        """Vertices of H^i, the subgrid bounded by C_i (empty for i = 0)"""
        if i == 0:
            return frozenset()
        self._check_level(i)
        return frozenset(v for cycle in self.cycles[:i] for v in cycle)

    def subgrid(self, i: int) -> MultiGraph:
        """H^i as a sub-multigraph (rings up to C_i and the spokes between them)"""
        return self.graph.subgraph(self.subgrid_vertices(i))

    def interior(self, i: int) -> MultiGraph:
        """H^i with the vertices of C_i removed"""
        return self.subgrid(i - 1) if i > 1 else MultiGraph()

    def _check_level(self, i: int) -> None:
        if not 1 <= i <= self.radius:
            raise GraphError(f"principal cycle C_{i} does not exist in H_{self.radius}")


def _vertex_id(i: int, side: int, pos: int) -> int:
    return 6 * (i - 1) ** 2 + side * (2 * i - 1) + pos


@lru_cache(maxsize=16)
def hex_grid(r: int) -> HexGrid:
    """
    Build the hexagonal grid of radius r.

    Args:
        r: number of principal cycles, at least 1

    Returns:
        HexGrid with 6r² vertices and 9r²-3r edges
    """
    if r < 1:
        raise GraphError(f"grid radius must be at least 1, got {r}")

    vertices = range(6 * r * r)
    edges: Dict[int, Tuple[int, int]] = {}
    next_id = 6 * r * r

    cycles = []
    cycle_edges = []
    for i in range(1, r + 1):
        ring = tuple(_vertex_id(i, s, p) for s in range(6) for p in range(2 * i - 1))
        ids = []
        for q, v in enumerate(ring):
            edges[next_id] = (v, ring[(q + 1) % len(ring)])
            ids.append(next_id)
            next_id += 1
        cycles.append(ring)
        cycle_edges.append(tuple(ids))

    spokes = []
    for i in range(1, r):
        ids = []
        for s in range(6):
            for t in range(i):
                edges[next_id] = (_vertex_id(i, s, 2 * t), _vertex_id(i + 1, s, 2 * t + 1))
                ids.append(next_id)
                next_id += 1
        spokes.append(tuple(ids))

    return HexGrid(r, MultiGraph(vertices, edges), tuple(cycles), tuple(cycle_edges), tuple(spokes))


def planted_grid(r: int, seed: int, pendants: int = 0) -> Tuple[MultiGraph, int]:
    """
    H_r with a K5 glued at one vertex of C_r and optional interior pendants.

    The K5 meets the grid in a single outer vertex, so it is not an
    attachment; pendants hang off inner-ring vertices and keep the grid flat.

    Args:
        r: grid radius
        seed: seed for random.Random
        pendants: number of pendant vertices joined to inner rings

    Returns:
        (graph, glue vertex)
    """
    rng = random.Random(seed)
    grid = hex_grid(r)
    glue = rng.choice(grid.cycle(r))
    next_id = grid.graph.fresh_id()

    clique = [glue]
    new_vertices = []
    for _ in range(4):
        clique.append(next_id)
        new_vertices.append(next_id)
        next_id += 1
    edges: Dict[int, Tuple[int, int]] = {}
    for a, u in enumerate(clique):
        for v in clique[a + 1:]:
            edges[next_id] = (u, v)
            next_id += 1

    inner = [v for cycle in grid.cycles[:-1] for v in cycle]
    for _ in range(pendants if inner else 0):
        new_vertices.append(next_id)
        edges[next_id + 1] = (rng.choice(inner), next_id)
        next_id += 2

    logger.info("planted K5 at vertex %d of H_%d (seed %d, %d pendant(s))", glue, r, seed, pendants)
    return grid.graph.with_additions(new_vertices, edges), glue
