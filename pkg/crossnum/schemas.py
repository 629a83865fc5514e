"""
Data models and schemas for certificates and reports.
Uses Pydantic for validation and JSON interchange.
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field


# ========== Graph Schema ==========
class GraphDocument(BaseModel):
    """JSON graph format with explicit vertex and edge ids"""
    vertices: List[int] = Field(default_factory=list, description="Vertex ids")
    edges: Dict[int, Tuple[int, int]] = Field(default_factory=dict, description="Edge id -> endpoints")
    forbidden: List[int] = Field(default_factory=list, description="Forbidden edge ids (F)")

    def to_graph(self):
        """Build the MultiGraph described by this document"""
        from .graphs.multigraph import MultiGraph
        return MultiGraph(self.vertices, self.edges)

    @classmethod
    def from_graph(cls, graph, forbidden=()) -> "GraphDocument":
        return cls(
            vertices=graph.vertex_ids(),
            edges={e: ends for e, ends in graph.edges.items()},
            forbidden=sorted(forbidden),
        )


# ========== Planarity Certificate Schemas ==========
class KuratowskiCertificate(BaseModel):
    """K5 or K3,3 subdivision certifying non-planarity"""
    pattern: Literal["K5", "K33"] = Field(..., description="Pattern tag")
    branch_vertices: List[int] = Field(..., description="Branch vertices (K33: side A then side B)")
    paths: List[List[int]] = Field(..., description="Connecting paths as edge-id lists")


class RotationCertificate(BaseModel):
    """Combinatorial planar embedding"""
    rotation: Dict[int, List[int]] = Field(..., description="Vertex -> cyclic order of incident edges")
    faces: int = Field(..., description="Number of faces found by face tracing")


# ========== Crossing Witness Schema ==========
class SubdivisionPathModel(BaseModel):
    """Path replacing one original edge"""
    vertices: List[int]
    edges: List[int]


class SubdivisionMapModel(BaseModel):
    """Links the subdivided graph back to the original"""
    subdivisions: int = Field(..., description="Subdivision vertices per edge (t)")
    paths: Dict[int, SubdivisionPathModel] = Field(default_factory=dict)

    def origin_of(self, piece: int) -> Optional[int]:
        """Original edge owning a subdivision piece"""
        for edge, path in self.paths.items():
            if piece in path.edges:
                return edge
        return None


class CrossingWitness(BaseModel):
    """Pairs of subdivided-graph edges whose crossing planarizes the graph"""
    pairs: List[Tuple[int, int]] = Field(default_factory=list, description="Canonical crossed pairs")
    subdivision: SubdivisionMapModel
    origins: List[Tuple[int, int]] = Field(default_factory=list, description="Original edge pair per crossed pair")

    @property
    def size(self) -> int:
        return len(self.pairs)


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class SolveReport(BaseModel):
    """Outcome of a k-crossing decision"""
    verdict: Verdict
    k: int = Field(..., description="Crossing budget decided")
    witness: Optional[CrossingWitness] = Field(None, description="Certificate when verdict is yes")
    lower_bound: int = Field(0, description="Euler/girth lower bound of the input")
    nodes: int = Field(0, description="Search nodes explored")
    method: str = Field("search", description="search or naive")
    elapsed_seconds: Optional[float] = Field(None, description="Wall-clock time (only when requested)")
    message: Optional[str] = None

    def is_yes(self) -> bool:
        return self.verdict == Verdict.YES


# ========== Grid Embedding Schema ==========
class GridEmbedding(BaseModel):
    """Topological embedding h: H_r -> G"""
    radius: int = Field(..., description="Grid radius r")
    vertex_map: Dict[int, int] = Field(..., description="Grid vertex -> graph vertex")
    edge_paths: Dict[int, List[int]] = Field(..., description="Grid edge -> graph edge path")


class ReductionStep(BaseModel):
    """One flat-grid contraction"""
    contracted_vertex: int
    contracted_size: int
    vertices_before: int
    vertices_after: int
    forbidden_after: int


class ReductionTrace(BaseModel):
    """History of the reduction loop"""
    steps: List[ReductionStep] = Field(default_factory=list)
    stopped: str = Field("no grid found", description="Why the loop ended")
    exhausted: bool = Field(False, description="Stopped on budget exhaustion")


# ========== Drawing Schemas ==========
class CrossingPoint(BaseModel):
    """A crossing as an exact rational point and the two edges through it"""
    x: str
    y: str
    edges: Tuple[int, int]

    @classmethod
    def at(cls, point: Tuple[Fraction, Fraction], e: int, f: int) -> "CrossingPoint":
        return cls(x=str(point[0]), y=str(point[1]), edges=(min(e, f), max(e, f)))

    def point(self) -> Tuple[Fraction, Fraction]:
        return Fraction(self.x), Fraction(self.y)


class Drawing(BaseModel):
    """Integer vertex points, edge polylines and declared crossings"""
    vertices: Dict[int, Tuple[int, int]] = Field(default_factory=dict)
    edges: Dict[int, List[Tuple[int, int]]] = Field(default_factory=dict)
    crossings: List[CrossingPoint] = Field(default_factory=list)


class ValidationReport(BaseModel):
    """Exact audit of a drawing"""
    crossing_count: int = 0
    crossings: List[CrossingPoint] = Field(default_factory=list)
    violations: List[str] = Field(default_factory=list)
    k: Optional[int] = None
    k_good: bool = False

    @property
    def valid(self) -> bool:
        return not self.violations
