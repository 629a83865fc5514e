"""
Tests for planarity certificates and the subdivision search.
"""

import pytest

from crossnum.graphs import (
    MultiGraph,
    SearchStatus,
    complete_bipartite_graph,
    complete_graph,
    find_subdivision,
    subdivide,
)
from crossnum.grid import hex_grid
from crossnum.planarity import KuratowskiWitness, RotationSystem, is_planar, planar_verdict, verify_witness

from .conftest import atlas_graphs


class TestIsPlanar:
    def test_k4_rotation_system(self, k4):
        result = is_planar(k4)
        assert isinstance(result, RotationSystem)
        assert result.face_count(k4) == 4
        assert result.euler_holds(k4)

    def test_rotation_covers_parallel_edges(self):
        g = MultiGraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (0, 2)])
        result = is_planar(g)
        assert isinstance(result, RotationSystem)
        assert sorted(result.rotation[0]) == [3, 4, 6]
        assert result.euler_holds(g)

    def test_grid_is_planar(self):
        grid = hex_grid(3).graph
        result = is_planar(grid)
        assert isinstance(result, RotationSystem)
        assert result.euler_holds(grid)

    def test_k5_witness(self, k5):
        result = is_planar(k5)
        assert isinstance(result, KuratowskiWitness)
        assert result.pattern == "K5"
        assert len(result.branch_vertices) == 5
        assert all(k5.degree(v) == 4 for v in result.branch_vertices)
        assert verify_witness(k5, result)

    def test_subdivided_k33_witness(self, k33):
        g = k33.with_additions([15], {16: (0, 15), 17: (15, 3)}).without_edges([6])
        result = is_planar(g)
        assert isinstance(result, KuratowskiWitness)
        assert result.pattern == "K33"
        assert sorted(len(p) for p in result.paths) == [1] * 8 + [2]
        assert verify_witness(g, result)

    def test_witness_model_round_trip(self, k5):
        witness = is_planar(k5)
        assert KuratowskiWitness.from_model(witness.to_model()) == witness


class TestVerifyWitness:
    def test_missing_edge(self, k5):
        witness = is_planar(k5)
        some_edge = witness.paths[0][0]
        assert not verify_witness(k5.without_edges([some_edge]), witness)

    def test_wrong_pattern_tag(self, k5):
        witness = is_planar(k5)
        relabelled = KuratowskiWitness("K33", witness.branch_vertices, witness.paths)
        assert not verify_witness(k5, relabelled)

    def test_k33_in_petersen(self, petersen):
        pattern = complete_bipartite_graph(3, 3)
        found = find_subdivision(pattern, petersen)
        assert found.status == SearchStatus.FOUND
        branch = tuple(found.embedding.vertex_map[v] for v in range(6))
        paths = tuple(found.embedding.edge_paths[e] for e in pattern.edge_ids())
        assert verify_witness(petersen, KuratowskiWitness("K33", branch, paths))


class TestSubdivisionSearch:
    def test_pattern_in_its_subdivision(self, k5):
        host = subdivide(k5, (), 2).graph
        found = find_subdivision(k5, host)
        assert found.status == SearchStatus.FOUND
        assert all(len(path) == 3 for path in found.embedding.edge_paths.values())

    def test_too_small_host(self, k4):
        assert find_subdivision(complete_graph(5), k4).status == SearchStatus.ABSENT

    def test_budget_exhaustion(self):
        host = hex_grid(2).graph
        result = find_subdivision(complete_bipartite_graph(3, 3), host, max_nodes=5)
        assert result.status == SearchStatus.EXHAUSTED
        assert result.embedding is None

    def test_degree_filter(self):
        result = find_subdivision(complete_graph(5), hex_grid(3).graph)
        assert result.status == SearchStatus.ABSENT
        assert result.nodes == 0

    @pytest.mark.parametrize("graph", atlas_graphs(6, min_nodes=5), ids=lambda g: f"n{g.num_vertices}m{g.num_edges}")
    def test_agrees_with_planarity(self, graph):
        has_k5 = find_subdivision(complete_graph(5), graph).status == SearchStatus.FOUND
        has_k33 = find_subdivision(complete_bipartite_graph(3, 3), graph).status == SearchStatus.FOUND
        assert planar_verdict(graph) == (not (has_k5 or has_k33))

    @pytest.mark.slow
    @pytest.mark.parametrize("graph", atlas_graphs(7, min_nodes=7), ids=lambda g: f"n{g.num_vertices}m{g.num_edges}")
    def test_agrees_with_planarity_seven_vertices(self, graph):
        has_k5 = find_subdivision(complete_graph(5), graph).status == SearchStatus.FOUND
        has_k33 = find_subdivision(complete_bipartite_graph(3, 3), graph).status == SearchStatus.FOUND
        assert planar_verdict(graph) == (not (has_k5 or has_k33))
