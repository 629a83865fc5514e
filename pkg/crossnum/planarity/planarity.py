"""
Planarity testing with a certificate either way.

Parallel edges are collapsed before networkx's planarity routine and
re-inserted into the rotation system afterwards; a non-planar verdict comes
with a K5 or K3,3 subdivision traced back to edge ids.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

import networkx as nx

from ..graphs.multigraph import MultiGraph
from ..schemas import KuratowskiCertificate, RotationCertificate

K5 = "K5"
K33 = "K33"


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic (clockwise) order of incident edges around every vertex"""

    rotation: Dict[int, Tuple[int, ...]]

    def faces(self, graph: MultiGraph) -> List[List[Tuple[int, int]]]:
        """
        Trace faces as orbits of darts (vertex, edge).

        From dart (v, e) the walk moves to w, the other end of e, and continues
        with the edge following e in the rotation at w.
        """
        position = {
            v: {e: i for i, e in enumerate(order)} for v, order in self.rotation.items()
        }
        seen = set()
        faces = []
        for v in sorted(self.rotation):
            for e in self.rotation[v]:
                if (v, e) in seen:
                    continue
                face = []
                dart = (v, e)
                while dart not in seen:
                    seen.add(dart)
                    face.append(dart)
                    here, edge = dart
                    w = graph.other_end(edge, here)
                    order = self.rotation[w]
                    dart = (w, order[(position[w][edge] + 1) % len(order)])
                faces.append(face)
        return faces

    def face_count(self, graph: MultiGraph) -> int:
        """Faces per component summed (an isolated vertex counts one face)"""
        isolated = sum(1 for v in graph.vertices if not self.rotation.get(v))
        return len(self.faces(graph)) + isolated

    def euler_holds(self, graph: MultiGraph) -> bool:
        """n - m + f = 2c with faces counted per component"""
        if set(self.rotation) != set(graph.vertices):
            return False
        for v, order in self.rotation.items():
            if sorted(order) != sorted(graph.incident_edges(v)):
                return False
        components = len(graph.components())
        f = self.face_count(graph)
        return graph.num_vertices - graph.num_edges + f == 2 * components

    def to_model(self, graph: MultiGraph) -> RotationCertificate:
        return RotationCertificate(
            rotation={v: list(order) for v, order in sorted(self.rotation.items())},
            faces=self.face_count(graph),
        )


@dataclass(frozen=True)
class KuratowskiWitness:
    """Subdivision of K5 or K3,3; for K33 the first three branch vertices form one side"""

    pattern: str
    branch_vertices: Tuple[int, ...]
    paths: Tuple[Tuple[int, ...], ...]

    def edges(self) -> frozenset:
        return frozenset(e for path in self.paths for e in path)

    def to_model(self) -> KuratowskiCertificate:
        return KuratowskiCertificate(
            pattern=self.pattern,
            branch_vertices=list(self.branch_vertices),
            paths=[list(p) for p in self.paths],
        )

    @classmethod
    def from_model(cls, model: KuratowskiCertificate) -> "KuratowskiWitness":
        return cls(model.pattern, tuple(model.branch_vertices), tuple(tuple(p) for p in model.paths))


PlanarityCertificate = Union[RotationSystem, KuratowskiWitness]


def is_planar(graph: MultiGraph) -> PlanarityCertificate:
    """
    Decide planarity of a multigraph.

    Args:
        graph: input multigraph (may be disconnected)

    Returns:
        RotationSystem when planar, otherwise a KuratowskiWitness
    """
    simple = graph.simple_view()
    planar, certificate = nx.check_planarity(simple, counterexample=True)
    if planar:
        return _rotation_from_embedding(graph, simple, certificate)
    return kuratowski_from_subgraph(simple, certificate)


def planar_verdict(graph: MultiGraph) -> bool:
    """Planarity verdict without building certificates"""
    planar, _ = nx.check_planarity(graph.simple_view())
    return planar


def _rotation_from_embedding(graph: MultiGraph, simple: nx.Graph, embedding) -> RotationSystem:
    # Parallel edges sit in one block: ascending at the smaller end, descending at the other,
    # so consecutive parallels bound digon faces.
    rotation: Dict[int, Tuple[int, ...]] = {}
    for v in sorted(graph.vertices):
        order: List[int] = []
        if simple.degree(v):
            for w in embedding.neighbors_cw_order(v):
                ids = sorted(simple[v][w]["ids"])
                order.extend(ids if v < w else reversed(ids))
        rotation[v] = tuple(order)
    return RotationSystem(rotation)


def kuratowski_from_subgraph(simple: nx.Graph, subgraph: nx.Graph) -> KuratowskiWitness:
    """
    Turn a Kuratowski subgraph (node pairs) into a witness over edge ids.

    Branch vertices are the nodes of degree at least 3; each path is traced
    through degree-2 nodes and mapped to the smallest edge id of every pair.
    """
    branch = sorted(v for v in subgraph.nodes if subgraph.degree(v) >= 3)
    branch_set = set(branch)
    paths = []
    seen = set()
    for b in branch:
        for first in sorted(subgraph.neighbors(b)):
            nodes = [b, first]
            while nodes[-1] not in branch_set:
                here, prev = nodes[-1], nodes[-2]
                nxt = [w for w in subgraph.neighbors(here) if w != prev]
                nodes.append(nxt[0])
            edge_ids = tuple(min(simple[u][w]["ids"]) for u, w in zip(nodes, nodes[1:]))
            key = frozenset(edge_ids)
            if key not in seen:
                seen.add(key)
                paths.append((nodes[0], nodes[-1], edge_ids))

    if len(branch) == 5:
        ordered = tuple(branch)
        return KuratowskiWitness(K5, ordered, tuple(p for _, _, p in paths))

    contracted = nx.Graph()
    contracted.add_nodes_from(branch)
    contracted.add_edges_from((a, z) for a, z, _ in paths)
    side_a, side_b = nx.bipartite.sets(contracted)
    if min(branch) not in side_a:
        side_a, side_b = side_b, side_a
    ordered = tuple(sorted(side_a)) + tuple(sorted(side_b))
    return KuratowskiWitness(K33, ordered, tuple(p for _, _, p in paths))


def verify_witness(graph: MultiGraph, witness: KuratowskiWitness) -> bool:
    """
    Audit a Kuratowski witness against a graph.

    Args:
        graph: the graph the witness claims to live in
        witness: pattern tag, branch vertices and paths

    Returns:
        True iff the paths exist, are internally disjoint and realize the pattern
    """
    branch = list(witness.branch_vertices)
    if witness.pattern == K5:
        expected_pairs = {frozenset(p) for p in itertools.combinations(branch, 2)}
        if len(branch) != 5:
            return False
    elif witness.pattern == K33:
        if len(branch) != 6:
            return False
        expected_pairs = {frozenset((a, b)) for a in branch[:3] for b in branch[3:]}
    else:
        return False
    if len(set(branch)) != len(branch) or any(not graph.has_vertex(v) for v in branch):
        return False
    if len(witness.paths) != len(expected_pairs):
        return False

    branch_set = set(branch)
    used_inner = set()
    used_edges = set()
    realized = set()
    for path in witness.paths:
        walk = _walk(graph, path)
        if walk is None:
            return False
        start, inner, end = walk[0], walk[1:-1], walk[-1]
        if start not in branch_set or end not in branch_set or start == end:
            return False
        if branch_set & set(inner) or used_inner & set(inner):
            return False
        if used_edges & set(path):
            return False
        used_inner.update(inner)
        used_edges.update(path)
        realized.add(frozenset((start, end)))

    if realized != expected_pairs:
        return False
    pattern = nx.complete_graph(5) if witness.pattern == K5 else nx.complete_bipartite_graph(3, 3)
    return nx.is_isomorphic(nx.Graph([tuple(p) for p in realized]), pattern)


def _walk(graph: MultiGraph, path: Sequence[int]):
    """Vertex sequence of a simple path given by edge ids, or None"""
    if not path or len(set(path)) != len(path):
        return None
    if any(not graph.has_edge(e) for e in path):
        return None
    first = graph.endpoints(path[0])
    if len(path) == 1:
        return list(first)
    second = set(graph.endpoints(path[1]))
    starts = [v for v in first if graph.other_end(path[0], v) in second]
    for start in starts:
        nodes = [start]
        ok = True
        for e in path:
            ends = graph.endpoints(e)
            if nodes[-1] not in ends:
                ok = False
                break
            nodes.append(graph.other_end(e, nodes[-1]))
        if ok and len(set(nodes)) == len(nodes):
            return nodes
    return None
