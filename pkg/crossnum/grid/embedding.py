"""
Topological embeddings h: H_r -> G, their images, attachments and flatness.

The interior of h(H^i) is every image vertex of H^i that is not on h(C_i):
branch images of the inner rings plus the inner vertices of every path of an
H^i edge outside C_i.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..config import GridConfig, config
from ..errors import EmbeddingError
from ..graphs.homeomorphism import SearchStatus, find_subdivision
from ..graphs.multigraph import MultiGraph
from ..graphs.surgery import h_components
from ..planarity.planarity import planar_verdict
from ..schemas import GridEmbedding
from ..utils.validators import audit_topological_embedding
from .hexgrid import HexGrid, hex_grid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridSearchResult:
    """Outcome of embed_grid"""

    status: SearchStatus
    embedding: Optional[GridEmbedding]
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND


# ========== Constructors ==========

def identity_embedding(grid: HexGrid) -> GridEmbedding:
    """The embedding of a grid into itself"""
    return GridEmbedding(
        radius=grid.radius,
        vertex_map={v: v for v in grid.graph.vertex_ids()},
        edge_paths={e: [e] for e in grid.graph.edge_ids()},
    )


def grid_embedding_from(
    radius: int,
    vertex_map: Mapping[int, int],
    edge_paths: Mapping[int, Sequence[int]],
) -> GridEmbedding:
    """Build a GridEmbedding with sorted keys"""
    return GridEmbedding(
        radius=radius,
        vertex_map=dict(sorted(vertex_map.items())),
        edge_paths={e: list(p) for e, p in sorted(edge_paths.items())},
    )


def audit_embedding(embedding: GridEmbedding, graph: MultiGraph) -> List[str]:
    """Violations of the topological-embedding conditions for h: H_r -> G"""
    if embedding.radius < 1:
        return [f"grid radius must be at least 1, got {embedding.radius}"]
    grid = hex_grid(embedding.radius)
    extra = sorted(set(embedding.vertex_map) - grid.graph.vertices)
    if extra:
        return [f"vertex {extra[0]} is not a vertex of H_{embedding.radius}"]
    extra = sorted(set(embedding.edge_paths) - set(grid.graph.edge_ids()))
    if extra:
        return [f"edge {extra[0]} is not an edge of H_{embedding.radius}"]
    return audit_topological_embedding(grid.graph, graph, embedding.vertex_map, embedding.edge_paths)


def _require_valid(embedding: GridEmbedding, graph: MultiGraph) -> HexGrid:
    issues = audit_embedding(embedding, graph)
    if issues:
        raise EmbeddingError(f"invalid grid embedding: {issues[0]}")
    return hex_grid(embedding.radius)


# ========== Search ==========

def embed_grid(graph: MultiGraph, r: int, budget: Optional[GridConfig] = None) -> GridSearchResult:
    """
    Search for a topological embedding of H_r into graph.

    Args:
        graph: host graph G
        r: grid radius
        budget: node/time limits (config.grid by default)

    Returns:
        GridSearchResult; ABSENT only when the search completed
    """
    budget = budget or config.grid
    grid = hex_grid(r)
    result = find_subdivision(grid.graph, graph, budget.max_nodes, budget.max_seconds)
    logger.info("grid H_%d search: %s after %d nodes", r, result.status.value, result.nodes)
    if not result.found:
        return GridSearchResult(result.status, None, result.nodes)
    found = result.embedding
    embedding = grid_embedding_from(r, found.vertex_map, found.edge_paths)
    return GridSearchResult(SearchStatus.FOUND, embedding, result.nodes)


# ========== Images ==========

def path_vertices(embedding: GridEmbedding, graph: MultiGraph, grid_edge: int) -> Tuple[int, ...]:
    """Host vertices along the image of a grid edge, from its smaller endpoint's image"""
    grid = hex_grid(embedding.radius)
    current = embedding.vertex_map[grid.graph.endpoints(grid_edge)[0]]
    nodes = [current]
    for f in embedding.edge_paths[grid_edge]:
        current = graph.other_end(f, current)
        nodes.append(current)
    return tuple(nodes)


def image_of(
    embedding: GridEmbedding,
    graph: MultiGraph,
    grid_vertices: Iterable[int],
    grid_edges: Iterable[int],
) -> MultiGraph:
    """h(S) for the grid subgraph S given by its vertices and edges"""
    vertices = {embedding.vertex_map[v] for v in grid_vertices}
    edges = set()
    for e in grid_edges:
        vertices.update(path_vertices(embedding, graph, e))
        edges.update(embedding.edge_paths[e])
    return graph.subgraph(vertices, edges)


def subgrid_image(embedding: GridEmbedding, graph: MultiGraph, i: Optional[int] = None) -> MultiGraph:
    """h(H^i); the full image h(H_r) when i is None"""
    grid = hex_grid(embedding.radius)
    i = grid.radius if i is None else i
    sub = grid.subgrid(i)
    return image_of(embedding, graph, sub.vertices, sub.edge_ids())


def cycle_image(embedding: GridEmbedding, graph: MultiGraph, i: int) -> MultiGraph:
    """h(C_i)"""
    grid = hex_grid(embedding.radius)
    return image_of(embedding, graph, grid.cycle(i), grid.cycle_edges[i - 1])


def interior_vertices(embedding: GridEmbedding, graph: MultiGraph, i: Optional[int] = None) -> FrozenSet[int]:
    """Vertices of h(H^i) that are not on h(C_i)"""
    grid = hex_grid(embedding.radius)
    i = grid.radius if i is None else i
    return frozenset(subgrid_image(embedding, graph, i).vertices - cycle_image(embedding, graph, i).vertices)


# ========== Attachments and flatness ==========

def _touches(component: MultiGraph, image: MultiGraph, region: FrozenSet[int]) -> bool:
    return bool((component.vertices & image.vertices) & region)


def attachments(embedding: GridEmbedding, graph: MultiGraph) -> List[MultiGraph]:
    """
    h(H_r)-components of G that meet the interior of h(H_r).

    Args:
        embedding: valid embedding h
        graph: G

    Returns:
        Attachments in h_components order
    """
    _require_valid(embedding, graph)
    image = subgrid_image(embedding, graph)
    region = interior_vertices(embedding, graph)
    return [c for c in h_components(graph, image) if _touches(c, image, region)]


def flat_union(embedding: GridEmbedding, graph: MultiGraph) -> MultiGraph:
    """h(H_r) together with all its attachments"""
    image = subgrid_image(embedding, graph)
    vertices = set(image.vertices)
    edges = set(image.edge_ids())
    for part in attachments(embedding, graph):
        vertices |= part.vertices
        edges.update(part.edge_ids())
    return graph.subgraph(vertices, edges)


def is_flat(embedding: GridEmbedding, graph: MultiGraph) -> bool:
    """True when h(H_r) with its attachments is planar"""
    flat = planar_verdict(flat_union(embedding, graph))
    logger.debug("grid embedding of radius %d flat: %s", embedding.radius, flat)
    return flat


def ring_parts(embedding: GridEmbedding, graph: MultiGraph, i: int) -> Tuple[MultiGraph, Dict[int, MultiGraph]]:
    """
    K_i: h(H^i) plus the attachments meeting the interior of h(H^i).

    Returns:
        (K_i, {index: attachment}) with indices from attachments(embedding, graph)
    """
    region = interior_vertices(embedding, graph, i)
    image = subgrid_image(embedding, graph, i)
    full = subgrid_image(embedding, graph)
    vertices = set(image.vertices)
    edges = set(image.edge_ids())
    chosen = {}
    for index, part in enumerate(attachments(embedding, graph)):
        if _touches(part, full, region):
            chosen[index] = part
            vertices |= part.vertices
            edges.update(part.edge_ids())
    return graph.subgraph(vertices, edges), chosen
