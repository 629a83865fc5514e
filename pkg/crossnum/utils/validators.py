"""
Certificate audits shared by the solver, the grid reduction and the CLI.
Each audit returns a list of violations; an empty list means the certificate holds.
"""

from typing import Iterable, List, Mapping, Optional, Sequence

from ..graphs.multigraph import MultiGraph
from ..graphs.surgery import crossed_sequence, subdivide
from ..errors import GraphError
from ..planarity.planarity import planar_verdict
from ..schemas import CrossingWitness


def audit_topological_embedding(
    pattern: MultiGraph,
    host: MultiGraph,
    vertex_map: Mapping[int, int],
    edge_paths: Mapping[int, Sequence[int]],
) -> List[str]:
    """
    Check the three conditions of a topological embedding.

    Args:
        pattern: embedded graph
        host: graph it is embedded in
        vertex_map: pattern vertex -> host vertex
        edge_paths: pattern edge -> host edge ids, from the image of either endpoint

    Returns:
        List of violations (empty when valid)
    """
    issues: List[str] = []

    # 1. injective on vertices
    missing = sorted(pattern.vertices - set(vertex_map))
    if missing:
        issues.append(f"pattern vertex {missing[0]} has no image")
    for v, image in vertex_map.items():
        if not host.has_vertex(image):
            issues.append(f"image {image} of pattern vertex {v} is not a host vertex")
    images = list(vertex_map.values())
    if len(set(images)) != len(images):
        issues.append("vertex map is not injective")
    if issues:
        return issues

    branch_images = set(images)
    inner_owner = {}
    edge_owner = {}
    for e in pattern.edge_ids():
        path = list(edge_paths.get(e, ()))
        if not path:
            issues.append(f"pattern edge {e} has no path")
            continue
        u, w = (vertex_map[x] for x in pattern.endpoints(e))
        nodes = _trace(host, path, u)
        if nodes is None or nodes[-1] != w:
            nodes = _trace(host, path, w)
            if nodes is None or nodes[-1] != u:
                issues.append(f"path of pattern edge {e} does not join the images of its endpoints")
                continue
        # 3. endpoints match and avoid other branch images
        for v in nodes[1:-1]:
            if v in branch_images:
                issues.append(f"path of pattern edge {e} passes through branch image {v}")
            # 2. internally disjoint
            if v in inner_owner:
                issues.append(f"paths of pattern edges {inner_owner[v]} and {e} share vertex {v}")
            inner_owner[v] = e
        for f in path:
            if f in edge_owner:
                issues.append(f"paths of pattern edges {edge_owner[f]} and {e} share edge {f}")
            edge_owner[f] = e
    return issues


def _trace(host: MultiGraph, path: Sequence[int], start: int) -> Optional[List[int]]:
    nodes = [start]
    for f in path:
        if not host.has_edge(f) or nodes[-1] not in host.endpoints(f):
            return None
        nodes.append(host.other_end(f, nodes[-1]))
    if len(set(nodes)) != len(nodes):
        return None
    return nodes


def validate_crossing_witness(
    graph: MultiGraph,
    forbidden: Iterable[int],
    witness: CrossingWitness,
    k: Optional[int] = None,
) -> List[str]:
    """
    Audit a crossing witness against (G, F).

    The subdivision map is recomputed from G and must match; the pairs must use
    pairwise distinct non-forbidden edges of G̃ and their planarization must be
    planar.

    Args:
        graph: G
        forbidden: F
        witness: certificate to check
        k: optional crossing budget

    Returns:
        List of violations (empty when valid)
    """
    issues: List[str] = []
    try:
        sub = subdivide(graph, forbidden, witness.subdivision.subdivisions)
    except GraphError as exc:
        return [str(exc)]
    if sub.to_model() != witness.subdivision:
        issues.append("subdivision map does not match the graph")
        return issues

    seen = set()
    for a, b in witness.pairs:
        for e in (a, b):
            if not sub.graph.has_edge(e):
                issues.append(f"edge {e} is not an edge of the subdivided graph")
            elif e in sub.forbidden:
                issues.append(f"edge {e} is forbidden")
            if e in seen:
                issues.append(f"edge {e} appears in more than one pair")
            seen.add(e)
    if k is not None and len(witness.pairs) > k:
        issues.append(f"witness has {len(witness.pairs)} pairs, budget is {k}")
    if issues:
        return issues

    planarization = crossed_sequence(sub.graph, witness.pairs).graph
    if not planar_verdict(planarization):
        issues.append("crossing the witness pairs does not give a planar graph")
    return issues
