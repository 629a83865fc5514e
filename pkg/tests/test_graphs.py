"""
Tests for the multigraph model, surgeries, kernel and file formats.
"""

import json
import math

import networkx as nx
import pytest

from crossnum.errors import GraphError
from crossnum.graphs import (
    MultiGraph,
    complete_graph,
    contract_connected,
    crossed_pair,
    crossed_sequence,
    cycle_graph,
    dump_graph,
    format_edge_list,
    girth,
    h_components,
    kernelize,
    load_graph,
    parse_edge_list,
    path_graph,
    random_multigraph,
    subdivide,
    uncross,
)
from crossnum.graphs.io import parse_id_list
from crossnum.planarity import planar_verdict


class TestMultiGraph:
    def test_from_pairs_assigns_disjoint_ids(self):
        g = MultiGraph.from_pairs(3, [(0, 1), (1, 2), (0, 1)])
        assert g.vertex_ids() == [0, 1, 2]
        assert g.edge_ids() == [3, 4, 5]
        assert g.edges_between(0, 1) == [3, 5]
        assert not g.is_simple()
        assert g.fresh_id() == 6

    def test_endpoints_are_sorted(self):
        g = MultiGraph([4, 7], {9: (7, 4)})
        assert g.endpoints(9) == (4, 7)
        assert g.other_end(9, 7) == 4

    def test_loop_rejected(self):
        with pytest.raises(GraphError, match="loop"):
            MultiGraph([0], {1: (0, 0)})

    def test_edge_id_collision_rejected(self):
        with pytest.raises(GraphError, match="collides"):
            MultiGraph([0, 1], {1: (0, 1)})

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(GraphError, match="unknown endpoint"):
            MultiGraph([0, 1], {2: (0, 5)})

    def test_negative_id_rejected(self):
        with pytest.raises(GraphError):
            MultiGraph([-1])

    def test_degree_counts_parallel_edges(self):
        g = MultiGraph.from_pairs(2, [(0, 1), (0, 1), (0, 1)])
        assert g.degree(0) == 3
        assert g.neighbors(0) == [1]

    def test_adjacent_edges(self, k4):
        assert k4.adjacent(4, 5)
        assert not k4.adjacent(4, 9)

    def test_subgraph_and_contains(self, k4):
        sub = k4.subgraph([0, 1, 2])
        assert sub.num_vertices == 3
        assert sub.num_edges == 3
        assert k4.contains(sub)
        assert not sub.contains(k4)

    def test_components(self):
        g = MultiGraph.from_pairs(5, [(0, 1), (2, 3)])
        assert sorted(sorted(c) for c in g.components()) == [[0, 1], [2, 3], [4]]

    def test_networkx_round_trip_keeps_structure(self):
        g = random_multigraph(6, 9, seed=3)
        assert g.to_networkx().number_of_edges() == 9
        assert g.universe() == g.vertices | set(g.edge_ids())

    def test_equality_uses_ids(self, k4):
        assert k4 == complete_graph(4)
        assert k4 != complete_graph(4).without_edges([4])


class TestCrossedPair:
    def test_two_disjoint_edges(self):
        g = MultiGraph.from_pairs(4, [(0, 1), (2, 3)])
        result = crossed_pair(g, 4, 5)
        assert result.graph.num_vertices == 5
        assert result.graph.num_edges == 4
        assert sorted(result.graph.neighbors(result.vertex)) == [0, 1, 2, 3]
        assert result.graph.degree(result.vertex) == 4

    def test_fresh_ids_follow_the_universe(self, k4):
        result = crossed_pair(k4, 4, 9)
        assert result.vertex == 10
        assert result.new_edges == (11, 12, 13, 14)
        assert result.new_edge(4, 0) == 11
        assert result.new_edge(9, 3) == 14

    def test_adjacent_edges_make_parallel_slots(self, k4):
        result = crossed_pair(k4, 4, 5)
        # edges 0-1 and 0-2 share vertex 0
        assert len(result.graph.edges_between(0, result.vertex)) == 2

    def test_same_edge_rejected(self, k4):
        with pytest.raises(GraphError):
            crossed_pair(k4, 4, 4)

    def test_k5_disjoint_pair_is_planar(self, k5):
        assert not planar_verdict(k5)
        assert planar_verdict(crossed_pair(k5, 5, 14).graph)

    def test_uncross_restores(self, k4):
        assert uncross(crossed_pair(k4, 4, 9)) == k4

    def test_sequence_empty_and_single(self, k4):
        assert crossed_sequence(k4, []).graph == k4
        assert crossed_sequence(k4, [(4, 9)]).graph == crossed_pair(k4, 4, 9).graph

    def test_sequence_rejects_reused_edge(self, k4):
        with pytest.raises(GraphError, match="more than one"):
            crossed_sequence(k4, [(4, 9), (4, 8)])


class TestSubdivide:
    def test_zero_is_identity(self, k5):
        sub = subdivide(k5, [5], 0)
        assert sub.graph == k5
        assert sub.forbidden == frozenset({5})

    def test_single_edge_twice(self):
        g = MultiGraph.from_pairs(2, [(0, 1)])
        sub = subdivide(g, (), 2)
        assert sub.graph.num_vertices == 4
        assert sub.graph.num_edges == 3
        assert len(sub.paths[2].edges) == 3

    def test_k5_once(self, k5):
        sub = subdivide(k5, (), 1)
        assert sub.graph.num_vertices == 15
        assert sub.graph.num_edges == 20
        assert sub.graph.is_simple()

    def test_forbidden_pieces(self, k4):
        sub = subdivide(k4, [4], 2)
        assert sub.forbidden == frozenset(sub.paths[4].edges)
        assert len(sub.forbidden) == 3

    def test_restore_and_origin(self, k4):
        sub = subdivide(k4, (), 2)
        assert sub.restore() == k4
        piece = sub.piece(7, 1)
        assert sub.origin()[piece] == (7, 1)

    def test_negative_rejected(self, k4):
        with pytest.raises(GraphError):
            subdivide(k4, (), -1)

    def test_unknown_forbidden_edge(self, k4):
        with pytest.raises(GraphError):
            subdivide(k4, [99], 1)


class TestContraction:
    def test_triangle_with_pendant(self):
        g = MultiGraph.from_pairs(4, [(0, 1), (1, 2), (0, 2), (3, 0)])
        result = contract_connected(g, [0, 1, 2])
        assert result.graph.num_vertices == 2
        assert result.graph.edge_ids() == [7]
        assert result.graph.endpoints(7) == (3, result.vertex)
        assert result.removed_edges == frozenset({4, 5, 6})

    def test_star_center_and_leaf(self):
        g = MultiGraph.from_pairs(4, [(0, 1), (0, 2), (0, 3)])
        result = contract_connected(g, [0, 1])
        assert result.graph.degree(result.vertex) == 2
        assert result.graph.num_vertices == 3

    def test_single_vertex_is_relabelling(self, k4):
        result = contract_connected(k4, [0])
        assert result.graph.num_edges == 6
        assert nx.is_isomorphic(result.graph.simple_view(), k4.simple_view())

    def test_parallels_survive(self, k3):
        merged = contract_connected(k3, [0, 1])
        assert len(merged.graph.edges_between(2, merged.vertex)) == 2

    def test_disconnected_set(self):
        g = MultiGraph.from_pairs(3, [(0, 2), (1, 2)])
        with pytest.raises(GraphError, match="not connected"):
            contract_connected(g, [0, 1])

    @pytest.mark.parametrize("vertex_set", [[], [9], [0, 1, 2, 3]])
    def test_bad_sets(self, k4, vertex_set):
        with pytest.raises(GraphError):
            contract_connected(k4, vertex_set)


class TestHComponents:
    def test_h_equals_g(self, k4):
        assert h_components(k4, k4) == []

    def test_cycle_around_path(self, c4):
        path = c4.subgraph([0, 1, 2], [4, 6])
        parts = h_components(c4, path)
        assert len(parts) == 1
        assert parts[0].vertices == frozenset({0, 2, 3})
        assert parts[0].num_edges == 2

    def test_k4_around_triangle(self, k4):
        triangle = k4.subgraph([0, 1, 2])
        parts = h_components(k4, triangle)
        assert len(parts) == 1
        assert sorted(parts[0].edge_ids()) == [6, 8, 9]

    def test_chord(self, k3):
        path = k3.subgraph([0, 1, 2], [3, 5])
        parts = h_components(k3, path)
        assert len(parts) == 1
        assert parts[0].edge_ids() == [4]

    def test_not_a_subgraph(self, k4, k5):
        with pytest.raises(GraphError):
            h_components(k4, k5)


class TestGirth:
    def test_values(self, k4, k33, petersen):
        assert girth(k4) == 3
        assert girth(k33) == 4
        assert girth(petersen) == 5

    def test_tree_and_parallels(self):
        assert girth(path_graph(5)) == math.inf
        assert girth(MultiGraph.from_pairs(2, [(0, 1), (0, 1)])) == 2


class TestKernel:
    def test_cycle_vanishes(self):
        kernel = kernelize(cycle_graph(5))
        assert kernel.graph.num_vertices == 0

    def test_pendant_path_removed(self, k5):
        g = k5.with_additions([15, 16], {17: (0, 15), 18: (15, 16)})
        kernel = kernelize(g)
        assert kernel.graph == k5

    def test_forbidden_merge(self, k5):
        sub = subdivide(k5, [5], 1)
        kernel = kernelize(sub.graph, sub.forbidden)
        assert kernel.graph.num_vertices == 5
        assert kernel.graph.num_edges == 10
        assert len(kernel.forbidden) == 1
        (merged,) = kernel.forbidden
        assert {e for e, _ in kernel.paths[merged]} == set(sub.paths[5].edges)

    def test_partly_forbidden_path_is_crossable(self, k5):
        sub = subdivide(k5, (), 1)
        first = sub.paths[5].edges[0]
        kernel = kernelize(sub.graph, [first])
        assert kernel.forbidden == frozenset()


class TestEdgeList:
    def test_parse_and_format(self, k4):
        text = format_edge_list(k4)
        assert text.splitlines()[0] == "4 6"
        assert parse_edge_list(text) == k4

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# triangle\n3 3\n\n0 1\n1 2\n# last\n0 2\n")
        assert g.num_edges == 3

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("", "empty"),
            ("3 2\n0 1\n", "announces 2 edges"),
            ("3 1\n1 1\n", "line 2: loop"),
            ("3 1\n0 3\n", "line 2: vertex 3"),
            ("3 1\n0 x\n", "line 2: not an integer"),
            ("3\n", "line 1"),
        ],
    )
    def test_errors_name_the_line(self, text, fragment):
        with pytest.raises(GraphError, match=fragment):
            parse_edge_list(text)

    def test_json_document(self, tmp_path, k4):
        path = tmp_path / "k4.json"
        path.write_text(dump_graph(k4, [4]), encoding="utf-8")
        graph, forbidden = load_graph(path)
        assert graph == k4
        assert forbidden == frozenset({4})

    def test_json_unknown_forbidden(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"vertices": [0, 1], "edges": {"2": [0, 1]}, "forbidden": [7]}))
        with pytest.raises(GraphError, match="forbidden edge 7"):
            load_graph(path)

    def test_id_list(self):
        assert parse_id_list("3,5 9") == frozenset({3, 5, 9})
        with pytest.raises(GraphError):
            parse_id_list("3,a")
