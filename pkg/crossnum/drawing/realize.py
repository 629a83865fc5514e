"""
Turn a crossing witness into a polyline drawing.

The planarization of G̃ gets a straight-line drawing on an integer grid; its
crossing vertices become crossing points and every subdivision path is
spliced back into one polyline per original edge.
"""

import logging
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..errors import DrawingError, InvalidCertificate
from ..graphs.multigraph import MultiGraph
from ..graphs.surgery import CrossedPair, crossed_sequence, subdivide
from ..planarity.planarity import planar_verdict
from ..schemas import CrossingPoint, CrossingWitness, Drawing
from ..utils.validators import validate_crossing_witness
from .validate import DrawingValidator

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


class DrawingRealizer:
    """Builds and self-checks drawings from witnesses"""

    def realize(self, graph: MultiGraph, witness: Optional[CrossingWitness] = None) -> Drawing:
        """
        Draw G with exactly the crossings named by the witness.

        Args:
            graph: G
            witness: crossing witness of G; None draws a planar G without crossings

        Returns:
            Drawing with integer vertex points and bend points

        Raises:
            DrawingError: G is not planar and no witness was given, or the result fails its audit
            InvalidCertificate: the witness does not planarize G or crosses an edge pair twice
        """
        if witness is None:
            if not planar_verdict(graph):
                raise DrawingError("graph is not planar and no crossing witness was given")
            sub = subdivide(graph, (), 1)
            witness = CrossingWitness(subdivision=sub.to_model())
        self._check(graph, witness)

        sub = subdivide(graph, (), witness.subdivision.subdivisions)
        sequence = crossed_sequence(sub.graph, witness.pairs)
        planar = sequence.graph
        # a second subdivision removes parallel edges before the straight-line layout
        layout_graph = subdivide(planar, (), 0 if planar.is_simple() else 1)
        position = self._layout(layout_graph.graph)

        crossing_of: Dict[int, CrossedPair] = {}
        for step in sequence.crossings:
            crossing_of[step.first] = step
            crossing_of[step.second] = step

        edges: Dict[int, List[Point]] = {}
        for e, path in sub.paths.items():
            walk: List[Tuple[int, int]] = []  # (planarization edge, start vertex)
            for piece, start, end in zip(path.edges, path.vertices, path.vertices[1:]):
                step = crossing_of.get(piece)
                if step is None:
                    walk.append((piece, start))
                else:
                    walk.append((step.new_edge(piece, start), start))
                    walk.append((step.new_edge(piece, end), step.vertex))
            vertices = [path.vertices[0]]
            for edge, start in walk:
                chain = layout_graph.paths[edge].vertices
                if chain[0] != start:
                    chain = chain[::-1]
                vertices.extend(chain[1:])
            edges[e] = [position[v] for v in vertices]

        origin = sub.origin()
        crossings = [
            CrossingPoint.at(position[step.vertex], origin[step.first][0], origin[step.second][0])
            for step in sequence.crossings
        ]
        drawing = Drawing(
            vertices={v: position[v] for v in graph.vertex_ids()},
            edges=edges,
            crossings=sorted(crossings, key=lambda c: (c.point(), c.edges)),
        )

        report = DrawingValidator(graph).validate(drawing)
        if not report.valid or report.crossing_count != len(witness.pairs):
            raise DrawingError("realized drawing failed its audit", report.violations)
        logger.info("realized drawing with %d crossing(s)", report.crossing_count)
        return drawing

    @staticmethod
    def _check(graph: MultiGraph, witness: CrossingWitness) -> None:
        origin = {
            piece: edge
            for edge, path in witness.subdivision.paths.items()
            for piece in path.edges
        }
        issues = []
        seen = set()
        for a, b in witness.pairs:
            if a not in origin or b not in origin:
                continue
            e, f = origin[a], origin[b]
            if e == f:
                issues.append(f"pair ({a}, {b}): edge {e} would cross itself")
            elif (min(e, f), max(e, f)) in seen:
                issues.append(f"pair ({a}, {b}): edges {e} and {f} would cross twice")
            seen.add((min(e, f), max(e, f)))
        issues += validate_crossing_witness(graph, (), witness)
        if issues:
            raise InvalidCertificate(f"witness cannot be realized: {'; '.join(issues)}", issues)

    @staticmethod
    def _layout(planar: MultiGraph) -> Dict[int, Point]:
        """Integer straight-line coordinates of a simple planar graph"""
        simple = planar.simple_view()
        is_planar, embedding = nx.check_planarity(simple)
        if not is_planar:
            raise DrawingError("planarization is not planar")
        position = nx.combinatorial_embedding_to_pos(embedding)
        return {v: (int(x), int(y)) for v, (x, y) in position.items()}


def realize(graph: MultiGraph, witness: Optional[CrossingWitness] = None) -> Drawing:
    return DrawingRealizer().realize(graph, witness)
