"""
Tests for hexagonal grids, grid embeddings, flatness and the flat-grid reduction.
"""

import pytest

from crossnum.config import GridConfig, ReductionConfig
from crossnum.errors import EmbeddingError, GraphError
from crossnum.graphs import SearchStatus, complete_graph, subdivide
from crossnum.grid import (
    FlatGridReducer,
    attachments,
    audit_embedding,
    embed_grid,
    forbidden_rings,
    hex_grid,
    identity_embedding,
    is_flat,
    lift_witness,
    planted_grid,
    reduce,
    reduce_loop,
)
from crossnum.grid.reduction import rings_disjoint
from crossnum.schemas import Verdict
from crossnum.solver import decide_k_good
from crossnum.utils import validate_crossing_witness


def _with_k5(graph, anchors):
    """Glue a K5 onto the anchor vertices, filling it up with new vertices"""
    next_id = graph.fresh_id()
    clique = list(anchors)
    added = []
    while len(clique) < 5:
        clique.append(next_id)
        added.append(next_id)
        next_id += 1
    edges = {}
    for i, u in enumerate(clique):
        for v in clique[i + 1:]:
            if u in anchors and v in anchors and graph.edges_between(u, v):
                continue
            edges[next_id] = (u, v)
            next_id += 1
    return graph.with_additions(added, edges)


def _with_pendant(graph, anchor):
    v = graph.fresh_id()
    return graph.with_additions([v], {v + 1: (anchor, v)})


class TestHexGrid:
    @pytest.mark.parametrize("r, n, m", [(1, 6, 6), (2, 24, 30), (3, 54, 72), (4, 96, 132)])
    def test_counts(self, r, n, m):
        grid = hex_grid(r)
        assert grid.graph.num_vertices == n
        assert grid.graph.num_edges == m

    def test_cycles(self):
        grid = hex_grid(3)
        assert [len(c) for c in grid.cycles] == [6, 18, 30]
        assert len(grid.cycle_edges[1]) == 18
        assert grid.ring_of(grid.cycle(2)[5]) == 2

    def test_degrees(self):
        grid = hex_grid(3)
        low = [v for v in grid.graph.vertices if grid.graph.degree(v) == 2]
        assert len(low) == 18
        assert all(grid.ring_of(v) == 3 for v in low)
        assert max(grid.graph.degree(v) for v in grid.graph.vertices) == 3

    def test_subgrids(self):
        grid = hex_grid(3)
        inner = grid.subgrid(2)
        assert inner.vertices == hex_grid(2).graph.vertices
        assert inner.num_edges == 30
        assert grid.interior(2).vertices == frozenset(grid.cycle(1))
        assert grid.interior(1).num_vertices == 0

    def test_bad_radius(self):
        with pytest.raises(GraphError):
            hex_grid(0)
        with pytest.raises(GraphError):
            hex_grid(2).cycle(3)


class TestPlantedGrid:
    def test_shape(self):
        graph, glue = planted_grid(4, seed=7, pendants=2)
        assert graph.num_vertices == 96 + 4 + 2
        assert graph.num_edges == 132 + 10 + 2
        assert glue in hex_grid(4).cycle(4)

    def test_seeded(self):
        assert planted_grid(3, seed=1, pendants=3) == planted_grid(3, seed=1, pendants=3)

    def test_flat_with_identity_embedding(self):
        graph, _ = planted_grid(4, seed=2, pendants=3)
        h = identity_embedding(hex_grid(4))
        assert is_flat(h, graph)
        assert len(attachments(h, graph)) == 3


class TestEmbedding:
    def test_identity_is_valid(self):
        grid = hex_grid(3)
        assert audit_embedding(identity_embedding(grid), grid.graph) == []

    def test_broken_embedding(self):
        grid = hex_grid(2)
        h = identity_embedding(grid)
        h.vertex_map[1] = 0
        assert audit_embedding(h, grid.graph)

    def test_embed_grid_in_itself(self):
        grid = hex_grid(2)
        result = embed_grid(grid.graph, 2, GridConfig(max_nodes=200_000))
        assert result.found
        assert audit_embedding(result.embedding, grid.graph) == []

    def test_too_small(self, k4):
        result = embed_grid(k4, 2)
        assert result.status == SearchStatus.ABSENT
        assert result.embedding is None

    @pytest.mark.slow
    def test_embed_in_subdivision(self):
        host = subdivide(hex_grid(2).graph, (), 1).graph
        result = embed_grid(host, 2, GridConfig(max_nodes=2_000_000))
        assert result.found
        assert audit_embedding(result.embedding, host) == []


class TestAttachments:
    def test_bare_grid(self):
        grid = hex_grid(3)
        assert attachments(identity_embedding(grid), grid.graph) == []

    def test_interior_pendant(self):
        grid = hex_grid(3)
        graph = _with_pendant(grid.graph, grid.cycle(1)[0])
        assert len(attachments(identity_embedding(grid), graph)) == 1

    def test_outer_pendant(self):
        grid = hex_grid(3)
        graph = _with_pendant(grid.graph, grid.cycle(3)[0])
        assert attachments(identity_embedding(grid), graph) == []


class TestFlatness:
    def test_bare_grid(self):
        grid = hex_grid(3)
        assert is_flat(identity_embedding(grid), grid.graph)

    def test_k5_on_interior_vertices(self):
        grid = hex_grid(3)
        a, b = grid.cycle(1)[0], grid.cycle(1)[1]
        graph = _with_k5(grid.graph, [a, b])
        assert not is_flat(identity_embedding(grid), graph)

    def test_k5_on_outer_vertices(self):
        grid = hex_grid(3)
        outer = grid.cycle(3)
        graph = _with_k5(grid.graph, [outer[0], outer[2]])
        assert is_flat(identity_embedding(grid), graph)


class TestReduce:
    def test_grid_of_radius_four(self):
        grid = hex_grid(4)
        h = identity_embedding(grid)
        step = FlatGridReducer(ReductionConfig(k=1)).reduce(grid.graph, (), h)
        assert step.graph.num_vertices == 91
        assert len(step.contracted) == 6
        assert len(step.forbidden) == 18 + 6
        assert step.cycle_edges == frozenset(grid.cycle_edges[1])
        assert set(step.graph.incident_edges(step.contracted_vertex)) <= step.forbidden

    def test_shortcut(self):
        grid = hex_grid(4)
        graph, forbidden = reduce(grid.graph, (), ReductionConfig(k=1), identity_embedding(grid))
        assert graph.num_vertices == 91
        assert len(forbidden) == 24

    def test_keeps_surviving_forbidden_edges(self):
        grid = hex_grid(4)
        outer_edge = grid.cycle_edges[3][0]
        inner_edge = grid.cycle_edges[0][0]
        graph, forbidden = reduce(grid.graph, [outer_edge, inner_edge], ReductionConfig(k=1), identity_embedding(grid))
        assert outer_edge in forbidden
        assert not graph.has_edge(inner_edge)

    def test_pendant_is_absorbed(self):
        grid = hex_grid(4)
        graph = _with_pendant(grid.graph, grid.cycle(1)[0])
        pendant = max(graph.vertices)
        step = FlatGridReducer(ReductionConfig(k=1)).reduce(graph, (), identity_embedding(grid))
        assert pendant in step.contracted
        assert not step.graph.has_vertex(pendant)
        assert step.graph.num_vertices == 91

    def test_not_flat(self):
        grid = hex_grid(4)
        graph = _with_k5(grid.graph, [grid.cycle(1)[0], grid.cycle(1)[1]])
        with pytest.raises(EmbeddingError, match="not flat"):
            FlatGridReducer(ReductionConfig(k=1)).reduce(graph, (), identity_embedding(grid))

    def test_radius_one(self):
        grid = hex_grid(1)
        with pytest.raises(EmbeddingError):
            FlatGridReducer(ReductionConfig(k=0)).reduce(grid.graph, (), identity_embedding(grid))

    def test_config(self):
        assert ReductionConfig(k=2).r == 6
        assert ReductionConfig(k=1, r=3).experimental
        with pytest.raises(ValueError):
            ReductionConfig(k=1, r=1)


class TestForbiddenRings:
    def test_grid_rings(self):
        grid = hex_grid(4)
        rings = forbidden_rings(identity_embedding(grid), grid.graph)
        assert {i: len(edges) for i, edges in rings.items()} == {2: 24, 3: 42, 4: 60}
        assert rings_disjoint(rings)

    def test_planted_rings(self):
        graph, _ = planted_grid(4, seed=5, pendants=4)
        assert rings_disjoint(forbidden_rings(identity_embedding(hex_grid(4)), graph))


class TestReduceLoop:
    def test_no_grid_in_k5(self, k5):
        graph, forbidden, trace = reduce_loop(k5, (), ReductionConfig(k=1))
        assert graph == k5
        assert forbidden == frozenset()
        assert trace.steps == []
        assert trace.stopped == "no grid found"
        assert not trace.exhausted

    @pytest.mark.slow
    def test_grid_of_radius_four(self):
        grid = hex_grid(4)
        reducer = FlatGridReducer(ReductionConfig(k=1, budget=GridConfig(max_nodes=2_000_000)))
        graph, _, trace = reducer.reduce_loop(grid.graph, ())
        assert len(trace.steps) >= 1
        assert graph.num_vertices < 96
        assert len(reducer.history) == len(trace.steps)


def _check_planted(seed: int) -> None:
    graph, _ = planted_grid(4, seed=seed, pendants=2)
    h = identity_embedding(hex_grid(4))
    step = FlatGridReducer(ReductionConfig(k=1)).reduce(graph, (), h)
    assert step.graph.num_vertices < graph.num_vertices
    assert rings_disjoint(forbidden_rings(h, graph))

    for k in (0, 1):
        before = decide_k_good(graph, (), k)
        after = decide_k_good(step.graph, step.forbidden, k)
        assert before.verdict == after.verdict
    assert after.verdict == Verdict.YES
    assert validate_crossing_witness(step.graph, step.forbidden, after.witness, 1) == []
    lifted = lift_witness(graph, (), step, after.witness)
    assert validate_crossing_witness(graph, (), lifted, 1) == []


class TestPlantedReduction:
    @pytest.mark.parametrize("seed", range(3))
    def test_decision_preserved(self, seed):
        _check_planted(seed)

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(3, 20))
    def test_decision_preserved_corpus(self, seed):
        _check_planted(seed)

    def test_lift_through_reducer(self):
        graph, _ = planted_grid(4, seed=11)
        reducer = FlatGridReducer(ReductionConfig(k=1))
        step = reducer.reduce(graph, (), identity_embedding(hex_grid(4)))
        reducer.history.append(step)
        report = decide_k_good(step.graph, step.forbidden, 1)
        lifted = reducer.lift(report.witness)
        assert validate_crossing_witness(graph, (), lifted, 1) == []

    def test_k5_alone_is_unchanged_by_loop(self):
        graph = complete_graph(5)
        reducer = FlatGridReducer(ReductionConfig(k=1))
        reduced, _, _ = reducer.reduce_loop(graph, ())
        assert reduced == graph
        assert reducer.history == []
