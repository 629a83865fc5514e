"""
Backtracking search for a topological embedding (a subdivision of a pattern
graph inside a host graph).

Degree-2 chains of the pattern are suppressed: branch vertices are placed one
at a time and every chain becomes a host path between branch images. Path
lengths are bounded by stretch * chain length and the stretch is deepened
iteratively, so tight embeddings (the common case for grids) are found first.
Only the last, unbounded level can prove absence.
"""

import logging
import math
import time
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .multigraph import MultiGraph

logger = logging.getLogger(__name__)


class SearchStatus(str, Enum):
    FOUND = "found"
    ABSENT = "absent"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class TopologicalEmbedding:
    """Pattern vertex -> host vertex, pattern edge -> host edge path"""

    vertex_map: Dict[int, int]
    # oriented from the image of the pattern edge's smaller endpoint
    edge_paths: Dict[int, Tuple[int, ...]]


@dataclass(frozen=True)
class SubdivisionSearchResult:
    status: SearchStatus
    embedding: Optional[TopologicalEmbedding]
    nodes: int

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND


@dataclass(frozen=True)
class _Chain:
    start: int
    end: int
    edges: Tuple[int, ...]
    inner: Tuple[int, ...]

    def reversed(self) -> "_Chain":
        return _Chain(self.end, self.start, self.edges[::-1], self.inner[::-1])


class _Exhausted(Exception):
    pass


class SubdivisionFinder:
    """Find a subdivision of pattern inside host"""

    def __init__(
        self,
        pattern: MultiGraph,
        host: MultiGraph,
        max_nodes: int = 200_000,
        max_seconds: Optional[float] = None,
    ):
        self.pattern = pattern
        self.host = host
        self.max_nodes = max_nodes
        self.max_seconds = max_seconds

        self._simple = host.simple_view()
        self._host_degree = {v: host.degree(v) for v in host.vertices}
        self._order: List[int] = []
        self._back: Dict[int, List[_Chain]] = {}
        self._chains: List[_Chain] = []
        self._nodes = 0
        self._deadline: Optional[float] = None
        self._stretch: Optional[int] = 1
        self._eccentricity: Dict[int, int] = {}

        self._image: Dict[int, int] = {}
        self._used_vertices: set = set()
        self._used_edges: set = set()
        self._routes: Dict[_Chain, Tuple[Tuple[int, ...], Tuple[int, ...]]] = {}

    def find(self) -> SubdivisionSearchResult:
        """
        Run the iterative-deepening search.

        Returns:
            FOUND with an embedding, ABSENT when the complete search failed, or
            EXHAUSTED when the node/time budget ran out first
        """
        if self._obviously_absent():
            return SubdivisionSearchResult(SearchStatus.ABSENT, None, 0)

        self._decompose()
        self._eccentricity = self._host_eccentricity()
        if self.max_seconds is not None:
            self._deadline = time.monotonic() + self.max_seconds

        n = max(self.host.num_vertices, 1)
        stretches: List[Optional[int]] = []
        s = 1
        while s < n - 1:
            stretches.append(s)
            s *= 2
        stretches.append(None)

        try:
            for stretch in stretches:
                self._stretch = stretch
                self._reset()
                logger.debug("subdivision search: stretch %s", stretch or "unbounded")
                if self._place(0):
                    return SubdivisionSearchResult(SearchStatus.FOUND, self._build(), self._nodes)
        except _Exhausted:
            logger.info("subdivision search exhausted after %d nodes", self._nodes)
            return SubdivisionSearchResult(SearchStatus.EXHAUSTED, None, self._nodes)
        return SubdivisionSearchResult(SearchStatus.ABSENT, None, self._nodes)

    # ---------- setup ----------

    def _obviously_absent(self) -> bool:
        if self.pattern.num_vertices > self.host.num_vertices:
            return True
        if self.pattern.num_edges > self.host.num_edges:
            return True
        needed = sorted((self.pattern.degree(v) for v in self.pattern.vertices), reverse=True)
        needed = [d for d in needed if d != 2]
        available = sorted(self._host_degree.values(), reverse=True)
        return any(have < need for have, need in zip(available, needed))

    def _decompose(self) -> None:
        pattern = self.pattern
        branch = {v for v in pattern.vertices if pattern.degree(v) != 2}
        for comp in pattern.components():
            if not comp & branch:
                branch.add(min(comp))

        used = set()
        chains = []
        for b in sorted(branch):
            for e in pattern.incident_edges(b):
                if e in used:
                    continue
                edges, inner = [e], []
                current = pattern.other_end(e, b)
                while current not in branch:
                    inner.append(current)
                    nxt = next(f for f in pattern.incident_edges(current) if f != edges[-1])
                    edges.append(nxt)
                    current = pattern.other_end(nxt, current)
                used.update(edges)
                chains.append(_Chain(b, current, tuple(edges), tuple(inner)))
        self._chains = chains

        adjacency: Dict[int, set] = {b: set() for b in branch}
        for c in chains:
            adjacency[c.start].add(c.end)
            adjacency[c.end].add(c.start)

        simple = pattern.simple_view()
        order: List[int] = []
        placed = set()
        for comp in pattern.components():
            sub = simple.subgraph(comp)
            ecc = nx.eccentricity(sub) if sub.number_of_nodes() > 1 else {min(comp): 0}
            roots = sorted((v for v in comp if v in branch), key=lambda v: (ecc[v], v))
            queue = [roots[0]]
            placed.add(roots[0])
            while queue:
                v = queue.pop(0)
                order.append(v)
                for w in sorted(adjacency[v]):
                    if w not in placed:
                        placed.add(w)
                        queue.append(w)
        self._order = order

        rank = {v: i for i, v in enumerate(order)}
        back: Dict[int, List[_Chain]] = {v: [] for v in order}
        for c in chains:
            if rank[c.start] > rank[c.end]:
                c = c.reversed()
            back[c.end].append(c)
        for v in back:
            back[v].sort(key=lambda c: (c.start == c.end, len(c.edges), c.edges))
        self._back = back

    def _host_eccentricity(self) -> Dict[int, int]:
        ecc: Dict[int, int] = {}
        for comp in nx.connected_components(self._simple):
            sub = self._simple.subgraph(comp)
            if sub.number_of_nodes() == 1:
                ecc[next(iter(comp))] = 0
            else:
                ecc.update(nx.eccentricity(sub))
        return ecc

    def _reset(self) -> None:
        self._image = {}
        self._used_vertices = set()
        self._used_edges = set()
        self._routes = {}

    def _tick(self) -> None:
        self._nodes += 1
        if self._nodes > self.max_nodes:
            raise _Exhausted()
        if self._deadline is not None and self._nodes % 256 == 0 and time.monotonic() > self._deadline:
            raise _Exhausted()

    # ---------- search ----------

    def _place(self, i: int) -> bool:
        if i == len(self._order):
            return True
        u = self._order[i]
        chains = self._back[u]
        for v in self._candidates(u, chains):
            self._tick()
            self._image[u] = v
            self._used_vertices.add(v)
            if self._route(i, chains, 0):
                return True
            del self._image[u]
            self._used_vertices.discard(v)
        return False

    def _route(self, i: int, chains: Sequence[_Chain], j: int) -> bool:
        if j == len(chains):
            return self._place(i + 1)
        chain = chains[j]
        a, b = self._image[chain.start], self._image[chain.end]
        for nodes, edge_ids in self._host_paths(a, b, len(chain.edges)):
            self._tick()
            inner = nodes[1:-1]
            self._used_vertices.update(inner)
            self._used_edges.update(edge_ids)
            self._routes[chain] = (nodes, edge_ids)
            if self._route(i, chains, j + 1):
                return True
            del self._routes[chain]
            self._used_vertices.difference_update(inner)
            self._used_edges.difference_update(edge_ids)
        return False

    def _limit(self, length: int) -> float:
        return math.inf if self._stretch is None else self._stretch * length

    def _candidates(self, u: int, chains: Sequence[_Chain]) -> List[int]:
        needed = self.pattern.degree(u)
        anchors = [c for c in chains if c.start != c.end]
        used = self._used_vertices
        if not anchors:
            free = [v for v in self.host.vertices if v not in used and self._host_degree[v] >= needed]
            return sorted(free, key=lambda v: (self._eccentricity[v], v))

        anchor = anchors[0]
        source = self._image[anchor.start]
        limit = self._limit(len(anchor.edges))
        view = self._free_view(frozenset(used) - {source}, frozenset(self._used_edges))
        cutoff = None if limit == math.inf else int(limit)
        dist = nx.single_source_shortest_path_length(view, source, cutoff=cutoff)
        cands = [
            v for v, d in dist.items()
            if v != source and v not in used and self._host_degree[v] >= needed
        ]
        return sorted(cands, key=lambda v: (dist[v], v))

    def _free_view(self, blocked_vertices: frozenset, blocked_edges: frozenset, skip_pair=None):
        simple = self._simple

        def node_ok(v):
            return v not in blocked_vertices

        def edge_ok(x, y):
            if skip_pair is not None and {x, y} == skip_pair:
                return False
            return any(e not in blocked_edges for e in simple[x][y]["ids"])

        return nx.subgraph_view(simple, filter_node=node_ok, filter_edge=edge_ok)

    def _edge_ids(self, nodes: Sequence[int], blocked_edges: frozenset, skip: Tuple[int, ...] = ()) -> Tuple[int, ...]:
        chosen = []
        for x, y in zip(nodes, nodes[1:]):
            free = [e for e in self._simple[x][y]["ids"] if e not in blocked_edges and e not in skip]
            chosen.append(min(free))
        return tuple(chosen)

    def _host_paths(self, a: int, b: int, length: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        limit = self._limit(length)
        blocked_edges = frozenset(self._used_edges)
        blocked_vertices = frozenset(self._used_vertices) - {a, b}

        if a != b:
            view = self._free_view(blocked_vertices, blocked_edges)
            try:
                for nodes in nx.shortest_simple_paths(view, a, b):
                    k = len(nodes) - 1
                    if k > limit:
                        return
                    if k >= length:
                        yield tuple(nodes), self._edge_ids(nodes, blocked_edges)
            except nx.NetworkXNoPath:
                return
            return

        # closed chain through a single branch vertex
        base = self._free_view(blocked_vertices, blocked_edges)
        for n in sorted(base.neighbors(a)):
            free_ids = sorted(e for e in self._simple[a][n]["ids"] if e not in blocked_edges)
            first = free_ids[0]
            if len(free_ids) >= 2 and length <= 2 <= limit:
                yield (a, n, a), (first, free_ids[1])
            view = self._free_view(blocked_vertices, blocked_edges, skip_pair={a, n})
            try:
                for nodes in nx.shortest_simple_paths(view, n, a):
                    k = len(nodes)
                    if k > limit:
                        break
                    if k >= length:
                        full = (a,) + tuple(nodes)
                        yield full, (first,) + self._edge_ids(nodes, blocked_edges)
            except nx.NetworkXNoPath:
                continue

    # ---------- result ----------

    def _build(self) -> TopologicalEmbedding:
        vertex_map = dict(self._image)
        edge_paths: Dict[int, Tuple[int, ...]] = {}
        for chain in (c for cs in self._back.values() for c in cs):
            nodes, edge_ids = self._routes[chain]
            length, k = len(chain.edges), len(edge_ids)
            cuts = [j * k // length for j in range(length + 1)]
            sequence = (chain.start,) + chain.inner + (chain.end,)
            for j, inner in enumerate(chain.inner, start=1):
                vertex_map[inner] = nodes[cuts[j]]
            for j, e in enumerate(chain.edges):
                piece = edge_ids[cuts[j]:cuts[j + 1]]
                if sequence[j] != self.pattern.endpoints(e)[0]:
                    piece = piece[::-1]
                edge_paths[e] = tuple(piece)
        return TopologicalEmbedding(dict(sorted(vertex_map.items())), dict(sorted(edge_paths.items())))


def find_subdivision(
    pattern: MultiGraph,
    host: MultiGraph,
    max_nodes: int = 200_000,
    max_seconds: Optional[float] = None,
) -> SubdivisionSearchResult:
    """Convenience wrapper around SubdivisionFinder"""
    return SubdivisionFinder(pattern, host, max_nodes, max_seconds).find()
