"""
Flat-grid contraction: replace the inside of the second principal cycle of a
flat grid by a single vertex whose edges, together with the cycle, become
forbidden. The reduced instance has a k-good drawing exactly when the
original one does, provided the grid radius is at least 2k+2.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..config import ReductionConfig
from ..errors import EmbeddingError, InvalidCertificate
from ..graphs.homeomorphism import SearchStatus
from ..graphs.multigraph import MultiGraph
from ..graphs.surgery import check_edge_set, contract_connected, subdivide
from ..schemas import CrossingWitness, GridEmbedding, ReductionStep, ReductionTrace
from ..solver.crossing_solver import witness_from_pairs
from ..utils.validators import validate_crossing_witness
from .embedding import audit_embedding, cycle_image, embed_grid, is_flat, ring_parts

logger = logging.getLogger(__name__)

# the contracted disc is always the one bounded by C_2
CONTRACTION_LEVEL = 2


@dataclass(frozen=True)
class Reduction:
    """One contraction step with enough provenance to lift witnesses back"""

    original: MultiGraph
    original_forbidden: FrozenSet[int]
    graph: MultiGraph
    forbidden: FrozenSet[int]
    contracted_vertex: int
    contracted: FrozenSet[int]
    cycle_edges: FrozenSet[int]

    def to_step(self) -> ReductionStep:
        return ReductionStep(
            contracted_vertex=self.contracted_vertex,
            contracted_size=len(self.contracted),
            vertices_before=self.original.num_vertices,
            vertices_after=self.graph.num_vertices,
            forbidden_after=len(self.forbidden),
        )


class FlatGridReducer:
    """Phase I: repeatedly find a flat grid and contract its inner disc"""

    def __init__(self, reduction_config: Optional[ReductionConfig] = None):
        self.reduction_config = reduction_config or ReductionConfig()
        self.history: List[Reduction] = []

    def reduce(self, graph: MultiGraph, forbidden: Iterable[int], embedding: GridEmbedding) -> Reduction:
        """
        Contract the interior of h(C_2) together with its attachments.

        Args:
            graph: G
            forbidden: F
            embedding: flat embedding h of H_r into G, r ≥ 2

        Returns:
            Reduction holding (G′, F′) and v_I
        """
        forbidden = frozenset(forbidden)
        check_edge_set(graph, forbidden)
        if embedding.radius < CONTRACTION_LEVEL:
            raise EmbeddingError(f"grid radius must be at least 2, got {embedding.radius}")
        issues = audit_embedding(embedding, graph)
        if issues:
            raise EmbeddingError(f"invalid grid embedding: {issues[0]}")
        if not is_flat(embedding, graph):
            raise EmbeddingError(f"grid embedding of radius {embedding.radius} is not flat")

        k = self.reduction_config.k
        if embedding.radius < 2 * k + 2:
            logger.warning(
                "experimental: radius %d is below 2k+2 = %d, decisions may change",
                embedding.radius, 2 * k + 2,
            )

        cycle = cycle_image(embedding, graph, CONTRACTION_LEVEL)
        part, _ = ring_parts(embedding, graph, CONTRACTION_LEVEL)
        inner = part.vertices - cycle.vertices
        if not inner:
            raise EmbeddingError("nothing lies inside the second principal cycle")

        contraction = contract_connected(graph, inner)
        reduced = contraction.graph
        v_new = contraction.vertex
        new_forbidden = (
            {e for e in forbidden if reduced.has_edge(e)}
            | set(cycle.edge_ids())
            | set(reduced.incident_edges(v_new))
        )
        step = Reduction(
            original=graph,
            original_forbidden=forbidden,
            graph=reduced,
            forbidden=frozenset(new_forbidden),
            contracted_vertex=v_new,
            contracted=contraction.contracted,
            cycle_edges=frozenset(cycle.edge_ids()),
        )
        logger.info(
            "contracted %d vertices into %d: |V| %d -> %d, |F| %d -> %d",
            len(inner), v_new, graph.num_vertices, reduced.num_vertices, len(forbidden), len(new_forbidden),
        )
        return step

    def reduce_loop(
        self, graph: MultiGraph, forbidden: Iterable[int]
    ) -> Tuple[MultiGraph, FrozenSet[int], ReductionTrace]:
        """
        Contract flat grids until none is found.

        Every step strictly shrinks |V|, so the loop terminates. Steps are kept
        in self.history for lift().

        Returns:
            (G′, F′, trace); trace.exhausted marks a stop on the search budget
        """
        forbidden = frozenset(forbidden)
        check_edge_set(graph, forbidden)
        r = self.reduction_config.r
        trace = ReductionTrace()
        self.history = []

        while True:
            found = embed_grid(graph, r, self.reduction_config.budget)
            if found.status == SearchStatus.EXHAUSTED:
                trace.stopped = "grid search budget exhausted"
                trace.exhausted = True
                break
            if not found.found:
                trace.stopped = "no grid found"
                break
            if not is_flat(found.embedding, graph):
                trace.stopped = "grid found but not flat"
                break
            step = self.reduce(graph, forbidden, found.embedding)
            self.history.append(step)
            trace.steps.append(step.to_step())
            graph, forbidden = step.graph, step.forbidden

        logger.info("reduction loop: %d step(s), %s", len(trace.steps), trace.stopped)
        return graph, forbidden, trace

    def lift(self, witness: CrossingWitness) -> CrossingWitness:
        """Carry a witness of the last reduced graph back through every recorded step"""
        for step in reversed(self.history):
            witness = lift_witness(step.original, step.original_forbidden, step, witness)
        return witness


def lift_witness(
    graph: MultiGraph,
    forbidden: Iterable[int],
    reduction: Reduction,
    witness: CrossingWitness,
) -> CrossingWitness:
    """
    Map a witness of (G′, F′) to a witness of (G, F).

    Crossed edges of G′ are never incident to v_I, so every crossed original
    edge keeps its id and endpoints in G and each piece maps to the piece with
    the same index.

    Raises:
        InvalidCertificate: when the witness fails on G′ or its lift fails on G
    """
    forbidden = frozenset(forbidden)
    issues = validate_crossing_witness(reduction.graph, reduction.forbidden, witness)
    if issues:
        raise InvalidCertificate("witness does not hold on the reduced graph", issues)

    origin: Dict[int, Tuple[int, int]] = {
        piece: (edge, i)
        for edge, path in witness.subdivision.paths.items()
        for i, piece in enumerate(path.edges)
    }
    sub = subdivide(graph, forbidden, witness.subdivision.subdivisions)
    pairs = [(origin[a], origin[b]) for a, b in witness.pairs]
    lifted = witness_from_pairs(sub, pairs)

    issues = validate_crossing_witness(graph, forbidden, lifted)
    if issues:
        raise InvalidCertificate("lifted witness does not hold on the original graph", issues)
    return lifted


def forbidden_rings(embedding: GridEmbedding, graph: MultiGraph) -> Dict[int, FrozenSet[int]]:
    """
    F_i for 2 ≤ i ≤ r: edges of K_i with an endpoint on h(C_i).

    For a flat embedding these sets are pairwise disjoint.
    """
    issues = audit_embedding(embedding, graph)
    if issues:
        raise EmbeddingError(f"invalid grid embedding: {issues[0]}")
    rings = {}
    for i in range(2, embedding.radius + 1):
        part, _ = ring_parts(embedding, graph, i)
        on_cycle = cycle_image(embedding, graph, i).vertices
        rings[i] = frozenset(
            e for e, (a, b) in part.edges.items() if a in on_cycle or b in on_cycle
        )
    return rings


def rings_disjoint(rings: Dict[int, FrozenSet[int]]) -> bool:
    seen: set = set()
    for edges in rings.values():
        if seen & edges:
            return False
        seen |= edges
    return True


# ========== Module-level shortcuts ==========

def reduce(
    graph: MultiGraph,
    forbidden: Iterable[int],
    reduction_config: ReductionConfig,
    embedding: GridEmbedding,
) -> Tuple[MultiGraph, FrozenSet[int]]:
    step = FlatGridReducer(reduction_config).reduce(graph, forbidden, embedding)
    return step.graph, step.forbidden


def reduce_loop(
    graph: MultiGraph, forbidden: Iterable[int], reduction_config: Optional[ReductionConfig] = None
) -> Tuple[MultiGraph, FrozenSet[int], ReductionTrace]:
    return FlatGridReducer(reduction_config).reduce_loop(graph, forbidden)
