"""
Graph surgeries: crossed pairs, subdivision, connected contraction, H-components.

Each surgery returns the new graph together with its provenance so that
forbidden sets and witnesses stay traceable across transforms.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

import networkx as nx

from ..errors import GraphError
from .multigraph import MultiGraph

EdgePair = Tuple[int, int]


# ========== Crossed pairs ==========

@dataclass(frozen=True)
class CrossedPair:
    """G^{e1×e2} plus the identifiers it introduced"""

    graph: MultiGraph
    vertex: int
    first: int
    second: int
    # (replaced edge, endpoint, new edge) for the four slots, in creation order
    slots: Tuple[Tuple[int, int, int], ...]

    def new_edge(self, edge: int, endpoint: int) -> int:
        for old, end, new in self.slots:
            if old == edge and end == endpoint:
                return new
        raise GraphError(f"edge {edge} has no slot at vertex {endpoint}")

    @property
    def new_edges(self) -> Tuple[int, ...]:
        return tuple(new for _, _, new in self.slots)


def crossed_pair(graph: MultiGraph, e1: int, e2: int) -> CrossedPair:
    """
    Replace e1 and e2 by a degree-4 vertex x joined to their four endpoint slots.

    Adjacent edges are allowed; their shared endpoint then gets two parallel
    edges to x.

    Args:
        graph: input multigraph
        e1: first edge id
        e2: second edge id, distinct from e1

    Returns:
        CrossedPair with the new graph, x and the four fresh edge ids
    """
    if e1 == e2:
        raise GraphError(f"cannot cross edge {e1} with itself")
    ends1 = graph.endpoints(e1)
    ends2 = graph.endpoints(e2)

    x = graph.fresh_id()
    slots = []
    next_id = x + 1
    for edge, ends in ((e1, ends1), (e2, ends2)):
        for endpoint in ends:
            slots.append((edge, endpoint, next_id))
            next_id += 1

    edges = {e: ends for e, ends in graph.edges.items() if e not in (e1, e2)}
    for _, endpoint, new in slots:
        edges[new] = (x, endpoint)
    crossed = MultiGraph(graph.vertices | {x}, edges)
    return CrossedPair(crossed, x, e1, e2, tuple(slots))


def uncross(crossing: CrossedPair) -> MultiGraph:
    """Delete the crossing vertex and restore both original edges under their old ids"""
    graph = crossing.graph
    ends: Dict[int, List[int]] = {crossing.first: [], crossing.second: []}
    for old, endpoint, _ in crossing.slots:
        ends[old].append(endpoint)
    edges = {e: pair for e, pair in graph.edges.items() if e not in crossing.new_edges}
    for old, (a, b) in ends.items():
        edges[old] = (a, b)
    return MultiGraph(graph.vertices - {crossing.vertex}, edges)


@dataclass(frozen=True)
class CrossedSequence:
    """G^{×ē} and the provenance of each fold step"""

    graph: MultiGraph
    crossings: Tuple[CrossedPair, ...]


def crossed_sequence(graph: MultiGraph, pairs: Sequence[EdgePair]) -> CrossedSequence:
    """
    Left fold of crossed_pair over pairs that touch pairwise distinct edges.

    Args:
        graph: input multigraph
        pairs: edge pairs; all 2l edges must be distinct and present

    Returns:
        CrossedSequence with the planarization candidate and per-pair provenance
    """
    seen = set()
    for pair in pairs:
        for e in pair:
            graph.endpoints(e)
            if e in seen:
                raise GraphError(f"edge {e} is used by more than one crossed pair")
            seen.add(e)

    crossings = []
    current = graph
    for e1, e2 in pairs:
        step = crossed_pair(current, e1, e2)
        crossings.append(step)
        current = step.graph
    return CrossedSequence(current, tuple(crossings))


# ========== Subdivision ==========

@dataclass(frozen=True)
class SubdivisionPath:
    """Path replacing one original edge, oriented from its smaller endpoint"""

    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]


@dataclass(frozen=True)
class Subdivision:
    """Result of subdivide: G̃, F̃ and the path of every original edge"""

    original: MultiGraph
    graph: MultiGraph
    forbidden: FrozenSet[int]
    subdivisions: int
    paths: Dict[int, SubdivisionPath] = field(hash=False)

    def piece(self, edge: int, index: int) -> int:
        """The index-th edge of the path replacing edge (0 = at its smaller endpoint)"""
        try:
            return self.paths[edge].edges[index]
        except (KeyError, IndexError):
            raise GraphError(f"edge {edge} has no subdivision piece {index}") from None

    def origin(self) -> Dict[int, Tuple[int, int]]:
        """Map each piece to (original edge, index along its path)"""
        return {
            piece: (edge, i)
            for edge, path in self.paths.items()
            for i, piece in enumerate(path.edges)
        }

    def restore(self) -> MultiGraph:
        """Suppress the subdivision vertices again and return the original graph"""
        graph = self.graph
        edges = {}
        for edge, path in self.paths.items():
            for inner in path.vertices[1:-1]:
                if graph.degree(inner) != 2:
                    raise GraphError(f"subdivision vertex {inner} does not have degree 2")
            for e in path.edges:
                graph.endpoints(e)
            edges[edge] = (path.vertices[0], path.vertices[-1])
        inner_vertices = {v for path in self.paths.values() for v in path.vertices[1:-1]}
        return MultiGraph(graph.vertices - inner_vertices, edges)

    def to_model(self):
        from ..schemas import SubdivisionMapModel, SubdivisionPathModel

        return SubdivisionMapModel(
            subdivisions=self.subdivisions,
            paths={
                e: SubdivisionPathModel(vertices=list(p.vertices), edges=list(p.edges))
                for e, p in sorted(self.paths.items())
            },
        )


def subdivide(graph: MultiGraph, forbidden: Iterable[int], t: int) -> Subdivision:
    """
    Replace every edge by a path of t+1 edges.

    Fresh ids are allocated deterministically in edge-id order: t vertices, then
    t+1 edges per original edge. With t=0 the graph and F are returned unchanged.

    Args:
        graph: input multigraph
        forbidden: F, a subset of the edges of graph
        t: number of subdivision vertices per edge

    Returns:
        Subdivision holding G̃, F̃ and the path map
    """
    if t < 0:
        raise GraphError(f"subdivision count must be non-negative, got {t}")
    forbidden = frozenset(forbidden)
    check_edge_set(graph, forbidden)

    if t == 0:
        paths = {e: SubdivisionPath((a, b), (e,)) for e, (a, b) in graph.edges.items()}
        return Subdivision(graph, graph, forbidden, 0, paths)

    next_id = graph.fresh_id()
    vertices = set(graph.vertices)
    edges = {}
    paths = {}
    pieces_forbidden = set()
    for e, (a, b) in graph.edges.items():
        inner = list(range(next_id, next_id + t))
        next_id += t
        chain = [a] + inner + [b]
        piece_ids = list(range(next_id, next_id + t + 1))
        next_id += t + 1
        vertices.update(inner)
        for piece, u, v in zip(piece_ids, chain, chain[1:]):
            edges[piece] = (u, v)
        paths[e] = SubdivisionPath(tuple(chain), tuple(piece_ids))
        if e in forbidden:
            pieces_forbidden.update(piece_ids)

    return Subdivision(graph, MultiGraph(vertices, edges), frozenset(pieces_forbidden), t, paths)


def check_edge_set(graph: MultiGraph, edges: Iterable[int]) -> None:
    """Raise GraphError when an id is not an edge of graph"""
    for e in edges:
        if not graph.has_edge(e):
            raise GraphError(f"edge {e} of the forbidden set is not an edge of the graph")


# ========== Contraction ==========

@dataclass(frozen=True)
class Contraction:
    """G′ with I contracted to a single new vertex"""

    graph: MultiGraph
    vertex: int
    contracted: FrozenSet[int]
    removed_edges: FrozenSet[int]


def contract_connected(graph: MultiGraph, vertex_set: Iterable[int]) -> Contraction:
    """
    Contract a connected vertex set I to a fresh vertex v_I.

    Edges inside I are deleted, edges leaving I are re-attached to v_I under
    their old ids (parallels stay parallel), so no loops appear.

    Args:
        graph: input multigraph
        vertex_set: I, non-empty, connected, not all of V

    Returns:
        Contraction with G′ and v_I
    """
    inner = frozenset(vertex_set)
    if not inner:
        raise GraphError("cannot contract an empty vertex set")
    unknown = inner - graph.vertices
    if unknown:
        raise GraphError(f"unknown vertex id {min(unknown)} in contraction set")
    if inner == graph.vertices:
        raise GraphError("contraction set must not contain every vertex")
    if not nx.is_connected(graph.subgraph(inner).simple_view()):
        raise GraphError(f"contraction set starting at vertex {min(inner)} is not connected")

    v_new = graph.fresh_id()
    edges = {}
    removed = set()
    for e, (a, b) in graph.edges.items():
        if a in inner and b in inner:
            removed.add(e)
        elif a in inner:
            edges[e] = (v_new, b)
        elif b in inner:
            edges[e] = (a, v_new)
        else:
            edges[e] = (a, b)
    contracted = MultiGraph((graph.vertices - inner) | {v_new}, edges)
    return Contraction(contracted, v_new, inner, frozenset(removed))


# ========== H-components ==========

def h_components(graph: MultiGraph, sub: MultiGraph) -> List[MultiGraph]:
    """
    H-components of G: bridges of the sub-multigraph H.

    Args:
        graph: G
        sub: H, a sub-multigraph of G with identical identifiers

    Returns:
        Type (a) components (a component of G∖H with its edges to H) ordered by
        smallest vertex, followed by type (b) chords ordered by edge id
    """
    if not graph.contains(sub):
        raise GraphError("H is not a sub-multigraph of G")

    outside = graph.vertices - sub.vertices
    rest = graph.subgraph(outside)
    result = []
    for comp in rest.components():
        edges = [
            e for e, (a, b) in graph.edges.items()
            if (a in comp or b in comp)
        ]
        touched = {w for e in edges for w in graph.endpoints(e)}
        result.append(graph.subgraph(touched, edges))

    for e, (a, b) in graph.edges.items():
        if sub.has_edge(e):
            continue
        if a in sub.vertices and b in sub.vertices:
            result.append(graph.subgraph((a, b), (e,)))
    return result


# ========== Girth ==========

def girth(graph: MultiGraph) -> Union[int, float]:
    """Length of a shortest cycle; 2 with parallel edges, math.inf for forests"""
    if not graph.is_simple():
        return 2
    basis = nx.minimum_cycle_basis(graph.simple_view())
    if not basis:
        return math.inf
    return min(len(cycle) for cycle in basis)
