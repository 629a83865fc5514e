"""
Shared fixtures: standard graphs, small corpora and file helpers.
"""

from pathlib import Path
from typing import Callable, List

import networkx as nx
import pytest

from crossnum.graphs import (
    MultiGraph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    format_edge_list,
    petersen_graph,
)


def atlas_graphs(max_nodes: int, min_nodes: int = 1) -> List[MultiGraph]:
    """Connected graphs of the networkx atlas with at least one edge"""
    graphs = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n < min_nodes or n > max_nodes:
            continue
        if g.number_of_edges() == 0 or not nx.is_connected(g):
            continue
        graphs.append(MultiGraph.from_networkx(g))
    return graphs


@pytest.fixture
def k4() -> MultiGraph:
    return complete_graph(4)


@pytest.fixture
def k5() -> MultiGraph:
    return complete_graph(5)


@pytest.fixture
def k6() -> MultiGraph:
    return complete_graph(6)


@pytest.fixture
def k33() -> MultiGraph:
    return complete_bipartite_graph(3, 3)


@pytest.fixture
def petersen() -> MultiGraph:
    return petersen_graph()


@pytest.fixture
def c4() -> MultiGraph:
    return cycle_graph(4)


@pytest.fixture
def k3() -> MultiGraph:
    return complete_graph(3)


@pytest.fixture
def write_graph(tmp_path: Path) -> Callable[[str, MultiGraph], Path]:
    """Write a graph as an edge list into tmp_path and return the file"""

    def _write(name: str, graph: MultiGraph) -> Path:
        path = tmp_path / name
        path.write_text(format_edge_list(graph), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def write_text(tmp_path: Path) -> Callable[[str, str], Path]:
    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
