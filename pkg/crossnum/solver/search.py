"""
Branch-and-bound over crossing configurations of one biconnected block.

A configuration lists, for every edge, the edges it crosses in order from its
smaller endpoint. Its planarization replaces each crossing by a degree-4
vertex. Only normalized drawings are searched: no edge crosses itself or an
adjacent edge, and two edges cross at most once.

Branching uses a Kuratowski subgraph W of the current planarization. If no
future crossing joins two segments of W, every W-path is merely subdivided and
W survives, so some planar completion starts with a crossing of two
W-segments. Branching over exactly those pairs is therefore complete.
"""

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx
from networkx.algorithms.planarity import get_counterexample

from ..config import SearchBudget
from ..graphs.multigraph import MultiGraph
from .bounds import simple_lower_bound

logger = logging.getLogger(__name__)

Sequences = Dict[int, Tuple[int, ...]]
Segment = Tuple[int, int]


class SearchExhausted(Exception):
    """Raised inside the search when the node or time budget is spent"""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


class ConfigurationSearch:
    """Depth-first search for at most `remaining` crossings making a block planar"""

    def __init__(self, graph: MultiGraph, forbidden: FrozenSet[int], budget: SearchBudget):
        self.graph = graph
        self.forbidden = forbidden
        self.budget = budget
        self.nodes = 0
        self._deadline = time.monotonic() + budget.max_seconds
        self._failed: Dict[tuple, int] = {}
        self._base = graph.fresh_id()

    # ---------- public ----------

    def search(self, remaining: int, start: Optional[Sequences] = None) -> Optional[Sequences]:
        """
        Look for a planarizing configuration extending start.

        Args:
            remaining: crossings that may still be added
            start: configuration to extend (empty by default)

        Returns:
            Sequences of the planar configuration, or None when none exists
        """
        return self._search(dict(start or {}), remaining)

    def root_branches(self, remaining: int) -> List[Sequences]:
        """First-level extensions of the empty configuration, in search order"""
        simple, lookup = self._planarize({})
        if remaining == 0 or nx.check_planarity(simple)[0]:
            return []
        return list(self._extensions({}, simple, lookup))

    # ---------- search ----------

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes or time.monotonic() > self._deadline:
            raise SearchExhausted(self.nodes)

    def _search(self, seqs: Sequences, remaining: int) -> Optional[Sequences]:
        self._tick()
        simple, lookup = self._planarize(seqs)
        if nx.check_planarity(simple)[0]:
            return seqs
        if remaining == 0:
            return None

        key = _key(seqs)
        if self._failed.get(key, -1) >= remaining:
            return None
        if simple_lower_bound(simple, girth_aware=False) > remaining:
            self._failed[key] = remaining
            return None

        for extended in self._extensions(seqs, simple, lookup):
            found = self._search(extended, remaining - 1)
            if found is not None:
                return found
        self._failed[key] = remaining
        return None

    def _planarize(self, seqs: Sequences):
        """Planarization as a simple graph plus node-pair -> segments lookup"""
        crossings = sorted({(min(e, p), max(e, p)) for e, ps in seqs.items() for p in ps})
        node_of = {pair: self._base + i for i, pair in enumerate(crossings)}

        simple = nx.Graph()
        simple.add_nodes_from(self.graph.vertices)
        simple.add_nodes_from(node_of.values())
        lookup: Dict[FrozenSet[int], List[Segment]] = {}
        for e, (u, v) in self.graph.edges.items():
            chain = [u] + [node_of[(min(e, p), max(e, p))] for p in seqs.get(e, ())] + [v]
            for i, (a, b) in enumerate(zip(chain, chain[1:])):
                simple.add_edge(a, b)
                lookup.setdefault(frozenset((a, b)), []).append((e, i))
        return simple, lookup

    def _extensions(self, seqs: Sequences, simple: nx.Graph, lookup):
        witness = get_counterexample(simple)
        segments = sorted({lookup[frozenset(pair)][0] for pair in witness.edges})
        crossed = {frozenset((e, p)) for e, ps in seqs.items() for p in ps}

        for (e1, i1), (e2, i2) in itertools.combinations(segments, 2):
            if e1 == e2 or e1 in self.forbidden or e2 in self.forbidden:
                continue
            if self.graph.adjacent(e1, e2) or frozenset((e1, e2)) in crossed:
                continue
            extended = dict(seqs)
            s1, s2 = seqs.get(e1, ()), seqs.get(e2, ())
            extended[e1] = s1[:i1] + (e2,) + s1[i1:]
            extended[e2] = s2[:i2] + (e1,) + s2[i2:]
            yield extended


def _key(seqs: Sequences) -> tuple:
    return tuple(sorted((e, ps) for e, ps in seqs.items() if ps))


def crossing_count(seqs: Sequences) -> int:
    return sum(len(ps) for ps in seqs.values()) // 2


# ---------- worker processes ----------

def _explore_branch(args) -> Tuple[Optional[Sequences], int, bool]:
    graph, forbidden, budget, start, remaining = args
    search = ConfigurationSearch(graph, forbidden, budget)
    try:
        return search.search(remaining, start), search.nodes, False
    except SearchExhausted as exc:
        return None, exc.nodes, True


def parallel_search(
    graph: MultiGraph,
    forbidden: FrozenSet[int],
    budget: SearchBudget,
    remaining: int,
    workers: int,
) -> Tuple[Optional[Sequences], int]:
    """
    Explore root branches in worker processes.

    The first successful branch in search order wins, so the result matches
    the single-worker search whenever every earlier branch completes.

    Returns:
        (configuration or None, nodes explored)
    """
    root = ConfigurationSearch(graph, forbidden, budget)
    simple, _ = root._planarize({})
    if nx.check_planarity(simple)[0]:
        return {}, 1
    branches = root.root_branches(remaining)
    if not branches:
        return None, 1

    nodes = 1
    exhausted = False
    jobs = [(graph, forbidden, budget, start, remaining - 1) for start in branches]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_explore_branch, job) for job in jobs]
        for future in futures:
            found, used, ran_out = future.result()
            nodes += used
            exhausted = exhausted or ran_out
            if found is not None:
                for pending in futures:
                    pending.cancel()
                return found, nodes
    if exhausted:
        raise SearchExhausted(nodes)
    return None, nodes
