"""
Crossing-preserving kernel of a multigraph.

Isolated and pendant vertices are deleted, degree-2 vertices are suppressed
and two-edge ears (a degree-2 vertex whose edges are parallel) are dropped.
None of these steps changes whether a k-good drawing with respect to F exists.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Tuple

from .multigraph import MultiGraph
from .surgery import check_edge_set

logger = logging.getLogger(__name__)

# (original edge, traversed from its smaller endpoint)
OrientedEdge = Tuple[int, bool]


@dataclass(frozen=True)
class Kernel:
    """Reduced graph plus, for each kernel edge, its path of original edges"""

    graph: MultiGraph
    forbidden: FrozenSet[int]
    # kernel edge -> original edges from the kernel edge's smaller endpoint
    paths: Dict[int, Tuple[OrientedEdge, ...]]

    def crossable_edge(self, edge: int, original_forbidden: FrozenSet[int]) -> OrientedEdge:
        """First constituent of a kernel edge that may carry crossings"""
        for item in self.paths[edge]:
            if item[0] not in original_forbidden:
                return item
        raise ValueError(f"kernel edge {edge} is forbidden")


def kernelize(graph: MultiGraph, forbidden: Iterable[int] = ()) -> Kernel:
    """
    Reduce graph to its crossing kernel.

    A suppressed vertex merges two edges into one fresh edge that is forbidden
    only when every original edge on it is forbidden.

    Args:
        graph: input multigraph
        forbidden: F

    Returns:
        Kernel with provenance back to the original edge ids
    """
    forbidden = frozenset(forbidden)
    check_edge_set(graph, forbidden)

    vertices = set(graph.vertices)
    edges: Dict[int, Tuple[int, int]] = dict(graph.edges)
    paths: Dict[int, Tuple[OrientedEdge, ...]] = {e: ((e, True),) for e in edges}
    blocked = {e: e in forbidden for e in edges}
    incidence: Dict[int, set] = {v: set(graph.incident_edges(v)) for v in vertices}
    next_id = graph.fresh_id()

    queue = sorted(vertices)
    while queue:
        v = queue.pop()
        if v not in vertices or len(incidence[v]) > 2:
            continue
        incident = sorted(incidence[v])
        touched = set()
        if len(incident) <= 1:
            for e in incident:
                touched.add(_other(edges[e], v))
                _drop_edge(e, edges, incidence, paths, blocked)
            vertices.discard(v)
            del incidence[v]
        else:
            a, b = incident
            u, w = _other(edges[a], v), _other(edges[b], v)
            if u == w:
                _drop_edge(a, edges, incidence, paths, blocked)
                _drop_edge(b, edges, incidence, paths, blocked)
                touched.add(u)
            else:
                merged = _path_from(edges, paths, a, u) + _path_from(edges, paths, b, v)
                new = next_id
                next_id += 1
                ends = (u, w) if u < w else (w, u)
                if ends[0] != u:
                    merged = tuple((e, not fwd) for e, fwd in reversed(merged))
                is_blocked = blocked[a] and blocked[b]
                _drop_edge(a, edges, incidence, paths, blocked)
                _drop_edge(b, edges, incidence, paths, blocked)
                edges[new] = ends
                paths[new] = merged
                blocked[new] = is_blocked
                incidence[u].add(new)
                incidence[w].add(new)
                touched.update((u, w))
            vertices.discard(v)
            del incidence[v]
        queue.extend(sorted(touched))

    kernel_graph = MultiGraph(vertices, edges)
    kernel_forbidden = frozenset(e for e in edges if blocked[e])
    logger.debug(
        "kernel: %d/%d vertices, %d/%d edges kept",
        kernel_graph.num_vertices, graph.num_vertices, kernel_graph.num_edges, graph.num_edges,
    )
    return Kernel(kernel_graph, kernel_forbidden, {e: paths[e] for e in edges})


def _other(ends: Tuple[int, int], v: int) -> int:
    return ends[1] if ends[0] == v else ends[0]


def _drop_edge(e, edges, incidence, paths, blocked) -> None:
    for end in edges[e]:
        incidence[end].discard(e)
    del edges[e]
    del paths[e]
    del blocked[e]


def _path_from(edges, paths, e: int, start: int) -> Tuple[OrientedEdge, ...]:
    """Constituents of e listed from the endpoint start"""
    if edges[e][0] == start:
        return paths[e]
    return tuple((orig, not fwd) for orig, fwd in reversed(paths[e]))
