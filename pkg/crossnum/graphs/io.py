"""
Graph file formats: the "n m" edge-list text format and the JSON graph document.
"""

import json
from pathlib import Path
from typing import FrozenSet, Iterable, Tuple, Union

from pydantic import ValidationError

from ..errors import GraphError
from ..schemas import GraphDocument
from .multigraph import MultiGraph

PathLike = Union[str, Path]


def parse_edge_list(text: str) -> MultiGraph:
    """
    Parse the edge-list format.

    First line "n m", then m lines "u v" with 0-based vertices. Blank lines and
    lines starting with '#' are skipped. Vertex ids are 0..n-1 and edge ids
    n..n+m-1 in file order.

    Args:
        text: file contents

    Returns:
        Parsed MultiGraph
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("edge list is empty: expected a header line 'n m'")

    header_line, header = rows[0]
    n, m = _ints(header, header_line, 2)
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header on line {header_line} announces {m} edges, found {len(body)}")

    pairs = []
    for lineno, fields in body:
        u, v = _ints(fields, lineno, 2)
        if u == v:
            raise GraphError(f"line {lineno}: loop at vertex {u} is not allowed")
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphError(f"line {lineno}: vertex {w} outside 0..{n - 1}")
        pairs.append((u, v))
    return MultiGraph.from_pairs(n, pairs)


def _ints(fields, lineno: int, count: int) -> Tuple[int, ...]:
    if len(fields) != count:
        raise GraphError(f"line {lineno}: expected {count} integers, got {len(fields)}")
    try:
        values = tuple(int(f) for f in fields)
    except ValueError:
        raise GraphError(f"line {lineno}: not an integer in {' '.join(fields)!r}") from None
    if any(v < 0 for v in values):
        raise GraphError(f"line {lineno}: negative value in {' '.join(fields)!r}")
    return values


def format_edge_list(graph: MultiGraph) -> str:
    """Write graph in edge-list format, relabelling vertices to 0..n-1 in id order"""
    index = {v: i for i, v in enumerate(graph.vertex_ids())}
    lines = [f"{graph.num_vertices} {graph.num_edges}"]
    lines += [f"{index[u]} {index[v]}" for u, v in graph.edges.values()]
    return "\n".join(lines) + "\n"


def load_graph(path: PathLike) -> Tuple[MultiGraph, FrozenSet[int]]:
    """
    Load a graph and its forbidden set from disk.

    Files ending in .json are graph documents; everything else is an edge list
    (with an empty forbidden set).

    Args:
        path: input file

    Returns:
        (graph, forbidden edge ids)
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphError(f"cannot read graph file {path}: {exc.strerror}") from None

    if path.suffix.lower() == ".json":
        try:
            document = GraphDocument.model_validate(json.loads(text))
        except (json.JSONDecodeError, ValidationError) as exc:
            raise GraphError(f"{path}: invalid graph document: {exc}") from None
        graph = document.to_graph()
        forbidden = frozenset(document.forbidden)
        for e in forbidden:
            if not graph.has_edge(e):
                raise GraphError(f"{path}: forbidden edge {e} is not an edge of the graph")
        return graph, forbidden

    return parse_edge_list(text), frozenset()


def dump_graph(graph: MultiGraph, forbidden: Iterable[int] = ()) -> str:
    """Serialize as a JSON graph document"""
    return GraphDocument.from_graph(graph, forbidden).model_dump_json(indent=2)


def parse_id_list(text: str) -> FrozenSet[int]:
    """Parse '3,5,9' (or whitespace separated) into a set of ids"""
    items = text.replace(",", " ").split()
    try:
        return frozenset(int(item) for item in items)
    except ValueError:
        raise GraphError(f"not a list of integer ids: {text!r}") from None
