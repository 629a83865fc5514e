"""
Loop-free undirected multigraph with stable integer identifiers.

Vertices and edges share one identifier space (V and E are disjoint), so the
universe U = V ∪ E is a plain set of integers. Instances are immutable; every
surgery returns a new graph and leaves untouched identifiers alone.
"""

from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

import networkx as nx

from ..errors import GraphError

EdgeEnds = Tuple[int, int]
EdgeInput = Union[Mapping[int, EdgeEnds], Iterable[Tuple[int, EdgeEnds]]]


def _check_id(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise GraphError(f"{what} must be a non-negative integer, got {value!r}")
    return value


class MultiGraph:
    """Immutable loop-free multigraph (parallel edges allowed)"""

    __slots__ = ("_vertices", "_edges", "_incidence")

    def __init__(self, vertices: Iterable[int] = (), edges: Optional[EdgeInput] = None):
        verts = frozenset(_check_id(v, "vertex id") for v in vertices)
        items = edges.items() if isinstance(edges, Mapping) else (edges or ())

        edge_map: Dict[int, EdgeEnds] = {}
        incidence: Dict[int, List[int]] = {v: [] for v in verts}
        for eid, ends in items:
            _check_id(eid, "edge id")
            u, v = ends
            if eid in verts:
                raise GraphError(f"edge id {eid} collides with a vertex id")
            if eid in edge_map:
                raise GraphError(f"duplicate edge id {eid}")
            if u == v:
                raise GraphError(f"edge {eid} is a loop at vertex {u}")
            for w in (u, v):
                if w not in verts:
                    raise GraphError(f"edge {eid} has unknown endpoint {w}")
            edge_map[eid] = (u, v) if u < v else (v, u)
            incidence[u].append(eid)
            incidence[v].append(eid)

        self._vertices = verts
        self._edges = dict(sorted(edge_map.items()))
        self._incidence = {v: tuple(sorted(es)) for v, es in incidence.items()}

    # ---------- construction helpers ----------

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[EdgeEnds]) -> "MultiGraph":
        """
        Build a graph on vertices 0..n-1 from an edge list.

        Edge ids are n, n+1, ... in list order, keeping V and E disjoint.
        """
        pairs = list(pairs)
        return cls(range(n), {n + i: (u, v) for i, (u, v) in enumerate(pairs)})

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "MultiGraph":
        """Convert a networkx graph, relabelling nodes to 0..n-1 in sorted order"""
        relabelled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
        pairs = sorted((min(u, v), max(u, v)) for u, v, *_ in relabelled.edges)
        return cls.from_pairs(relabelled.number_of_nodes(), pairs)

    # ---------- accessors ----------

    @property
    def vertices(self) -> FrozenSet[int]:
        return self._vertices

    @property
    def edges(self) -> Mapping[int, EdgeEnds]:
        return MappingProxyType(self._edges)

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def vertex_ids(self) -> List[int]:
        return sorted(self._vertices)

    def edge_ids(self) -> List[int]:
        return list(self._edges)

    def universe(self) -> FrozenSet[int]:
        return self._vertices | frozenset(self._edges)

    def has_vertex(self, v: int) -> bool:
        return v in self._vertices

    def has_edge(self, e: int) -> bool:
        return e in self._edges

    def endpoints(self, e: int) -> EdgeEnds:
        try:
            return self._edges[e]
        except KeyError:
            raise GraphError(f"unknown edge id {e}") from None

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def incident_edges(self, v: int) -> Tuple[int, ...]:
        try:
            return self._incidence[v]
        except KeyError:
            raise GraphError(f"unknown vertex id {v}") from None

    def degree(self, v: int) -> int:
        return len(self.incident_edges(v))

    def neighbors(self, v: int) -> List[int]:
        return sorted({self.other_end(e, v) for e in self.incident_edges(v)})

    def edges_between(self, u: int, v: int) -> List[int]:
        return [e for e in self.incident_edges(u) if self.other_end(e, u) == v]

    def fresh_id(self) -> int:
        """Smallest identifier above every vertex and edge id"""
        universe = self.universe()
        return max(universe) + 1 if universe else 0

    def is_simple(self) -> bool:
        return len({ends for ends in self._edges.values()}) == len(self._edges)

    def adjacent(self, e: int, f: int) -> bool:
        """True when two edges share an endpoint"""
        return bool(set(self.endpoints(e)) & set(self.endpoints(f)))

    # ---------- derived graphs ----------

    def subgraph(self, vertices: Iterable[int], edges: Optional[Iterable[int]] = None) -> "MultiGraph":
        """
        Sub-multigraph on the given vertices.

        Args:
            vertices: vertex ids to keep
            edges: edge ids to keep; defaults to every edge induced by the vertices

        Returns:
            New MultiGraph sharing this graph's identifiers
        """
        keep = frozenset(vertices)
        unknown = keep - self._vertices
        if unknown:
            raise GraphError(f"unknown vertex id {min(unknown)}")
        if edges is None:
            chosen = [e for e, (u, v) in self._edges.items() if u in keep and v in keep]
        else:
            chosen = sorted(set(edges))
        return MultiGraph(keep, {e: self.endpoints(e) for e in chosen})

    def without_edges(self, removed: Iterable[int]) -> "MultiGraph":
        drop = set(removed)
        for e in drop:
            self.endpoints(e)
        return MultiGraph(self._vertices, {e: ends for e, ends in self._edges.items() if e not in drop})

    def without_vertices(self, removed: Iterable[int]) -> "MultiGraph":
        drop = set(removed)
        return self.subgraph(self._vertices - drop)

    def with_additions(
        self,
        vertices: Iterable[int] = (),
        edges: Optional[Mapping[int, EdgeEnds]] = None,
    ) -> "MultiGraph":
        merged = dict(self._edges)
        for e, ends in (edges or {}).items():
            if e in merged:
                raise GraphError(f"duplicate edge id {e}")
            merged[e] = ends
        return MultiGraph(self._vertices | frozenset(vertices), merged)

    def contains(self, other: "MultiGraph") -> bool:
        """True when other is a sub-multigraph with identical identifiers"""
        if not other.vertices <= self._vertices:
            return False
        return all(self._edges.get(e) == ends for e, ends in other.edges.items())

    def components(self) -> List[FrozenSet[int]]:
        """Vertex sets of connected components, ordered by smallest vertex"""
        comps = [frozenset(c) for c in nx.connected_components(self.simple_view())]
        return sorted(comps, key=min)

    # ---------- networkx views ----------

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(sorted(self._vertices))
        for e, (u, v) in self._edges.items():
            graph.add_edge(u, v, key=e)
        return graph

    def simple_view(self) -> nx.Graph:
        """Collapse parallel edges; each vertex pair keeps its edge ids in 'ids'"""
        graph = nx.Graph()
        graph.add_nodes_from(sorted(self._vertices))
        for e, (u, v) in self._edges.items():
            if graph.has_edge(u, v):
                graph[u][v]["ids"].append(e)
            else:
                graph.add_edge(u, v, ids=[e])
        return graph

    # ---------- dunder ----------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"MultiGraph(|V|={self.num_vertices}, |E|={self.num_edges})"
