"""
Exact audit of a polyline drawing.

Rules checked:
1. distinct vertices sit on distinct points;
2. an edge polyline runs between its endpoints' points, is simple and passes
   through no other vertex point;
3. two polylines share at most one point apart from common endpoints;
4. no point lies on more than two polylines.

Every common interior point of two polylines is a crossing.
"""

import itertools
import logging
from typing import Dict, Iterable, List, Optional, Set, Tuple

from ..graphs.multigraph import MultiGraph
from ..schemas import CrossingPoint, Drawing, ValidationReport
from .geometry import ExactPoint, exact, on_segment, segment_intersection, segments

logger = logging.getLogger(__name__)


class DrawingValidator:
    """Checks a Drawing of G against the drawing rules and k-goodness"""

    def __init__(self, graph: MultiGraph, forbidden: Iterable[int] = ()):
        self.graph = graph
        self.forbidden = frozenset(forbidden)

    def validate(self, drawing: Drawing, k: Optional[int] = None) -> ValidationReport:
        """
        Audit a drawing.

        Args:
            drawing: vertex points, edge polylines and declared crossings
            k: crossing budget for the k-good verdict (unbounded when None)

        Returns:
            ValidationReport; violations are listed, never raised
        """
        violations: List[str] = []
        violations += self._check_vertices(drawing)
        if violations:
            return ValidationReport(violations=violations, k=k)
        violations += self._check_polylines(drawing)
        if violations:
            return ValidationReport(violations=violations, k=k)

        crossings, pair_violations = self._crossings(drawing)
        violations += pair_violations
        violations += self._check_declared(drawing, crossings)

        touches_forbidden = any(set(c.edges) & self.forbidden for c in crossings)
        within = k is None or len(crossings) <= k
        report = ValidationReport(
            crossing_count=len(crossings),
            crossings=crossings,
            violations=violations,
            k=k,
            k_good=not violations and within and not touches_forbidden,
        )
        logger.debug("drawing audit: %d crossing(s), %d violation(s)", len(crossings), len(violations))
        return report

    # ---------- rule 1 ----------

    def _check_vertices(self, drawing: Drawing) -> List[str]:
        issues = []
        for v in self.graph.vertex_ids():
            if v not in drawing.vertices:
                issues.append(f"vertex {v} has no point")
        for v in sorted(set(drawing.vertices) - self.graph.vertices):
            issues.append(f"point given for unknown vertex {v}")
        owner: Dict[Tuple[int, int], int] = {}
        for v, p in sorted(drawing.vertices.items()):
            if tuple(p) in owner:
                issues.append(f"vertices {owner[tuple(p)]} and {v} share the point {tuple(p)}")
            owner.setdefault(tuple(p), v)
        return issues

    # ---------- rule 2 ----------

    def _check_polylines(self, drawing: Drawing) -> List[str]:
        issues = []
        for e in self.graph.edge_ids():
            if e not in drawing.edges:
                issues.append(f"edge {e} has no polyline")
        for e in sorted(set(drawing.edges) - set(self.graph.edge_ids())):
            issues.append(f"polyline given for unknown edge {e}")
        if issues:
            return issues

        points = {v: tuple(p) for v, p in drawing.vertices.items()}
        for e, line in drawing.edges.items():
            line = [tuple(p) for p in line]
            u, v = self.graph.endpoints(e)
            if len(line) < 2:
                issues.append(f"polyline of edge {e} has fewer than two points")
                continue
            if {line[0], line[-1]} != {points[u], points[v]}:
                issues.append(f"polyline of edge {e} does not join the points of vertices {u} and {v}")
                continue
            issues += self._simple_polyline(e, line)
            for w, p in points.items():
                if w not in (u, v) and any(on_segment(p, a, b) for a, b in segments(line)):
                    issues.append(f"polyline of edge {e} passes through vertex {w}")
        return issues

    @staticmethod
    def _simple_polyline(e: int, line) -> List[str]:
        parts = segments(line)
        for a, b in parts:
            if a == b:
                return [f"polyline of edge {e} has a zero-length segment"]
        for (i, (a, b)), (j, (c, d)) in itertools.combinations(enumerate(parts), 2):
            hit = segment_intersection(a, b, c, d)
            if hit is None:
                continue
            if j == i + 1 and hit == exact(b):
                continue
            return [f"polyline of edge {e} is not simple"]
        return []

    # ---------- rules 3 and 4 ----------

    def _crossings(self, drawing: Drawing) -> Tuple[List[CrossingPoint], List[str]]:
        issues = []
        vertex_points: Set[ExactPoint] = {exact(tuple(p)) for p in drawing.vertices.values()}
        lines = {e: [tuple(p) for p in drawing.edges[e]] for e in self.graph.edge_ids()}

        found: List[CrossingPoint] = []
        at_point: Dict[ExactPoint, Set[int]] = {}
        for e, f in itertools.combinations(self.graph.edge_ids(), 2):
            shared: Set[ExactPoint] = set()
            overlap = False
            for a, b in segments(lines[e]):
                for c, d in segments(lines[f]):
                    hit = segment_intersection(a, b, c, d)
                    if hit is None:
                        continue
                    if isinstance(hit[0], tuple):
                        overlap = True
                        continue
                    if hit not in vertex_points:
                        shared.add(hit)
            if overlap:
                issues.append(f"polylines of edges {e} and {f} overlap")
                continue
            if len(shared) > 1:
                issues.append(f"polylines of edges {e} and {f} share {len(shared)} interior points")
            for point in sorted(shared):
                found.append(CrossingPoint.at(point, e, f))
                at_point.setdefault(point, set()).update((e, f))

        for point, edges in sorted(at_point.items()):
            if len(edges) > 2:
                issues.append(
                    f"point ({point[0]}, {point[1]}) lies on {len(edges)} edges {sorted(edges)}"
                )
        found.sort(key=lambda c: (c.point(), c.edges))
        return found, issues

    @staticmethod
    def _check_declared(drawing: Drawing, crossings: List[CrossingPoint]) -> List[str]:
        if not drawing.crossings:
            return []
        declared = sorted((c.point(), c.edges) for c in drawing.crossings)
        computed = sorted((c.point(), c.edges) for c in crossings)
        if declared != computed:
            return [f"declared crossings ({len(declared)}) differ from computed ones ({len(computed)})"]
        return []


def validate(
    graph: MultiGraph,
    forbidden: Iterable[int],
    drawing: Drawing,
    k: Optional[int] = None,
) -> ValidationReport:
    return DrawingValidator(graph, forbidden).validate(drawing, k)
