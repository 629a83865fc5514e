"""
Generalized k-crossing problem: decide whether G has a drawing with at most k
crossings in which no edge of F is crossed, and compute crossing numbers.

The input is reduced to its kernel and split into biconnected blocks; each
non-planar block is solved by the configuration search and the per-block
configurations are lowered to a witness on the subdivided graph G̃.
"""

import itertools
import logging
import time
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from ..config import SolverConfig, config
from ..errors import BudgetExceeded, GraphError, InvalidCertificate
from ..graphs.kernel import Kernel, kernelize
from ..graphs.multigraph import MultiGraph
from ..graphs.surgery import Subdivision, check_edge_set, crossed_sequence, subdivide
from ..planarity.planarity import planar_verdict
from ..schemas import CrossingWitness, SolveReport, Verdict
from ..utils.validators import validate_crossing_witness
from .bounds import lower_bound
from .search import ConfigurationSearch, SearchExhausted, Sequences, crossing_count, parallel_search

logger = logging.getLogger(__name__)


def subdivision_count(k: int) -> int:
    """Subdivision vertices per edge used for budget k"""
    return max(k - 1, 1)


@dataclass(frozen=True)
class _Block:
    graph: MultiGraph
    forbidden: FrozenSet[int]


class CrossingSolver:
    """Decides k-good drawability with certificates"""

    def __init__(self, solver_config: Optional[SolverConfig] = None):
        self.solver_config = solver_config or config.solver
        self.budget = self.solver_config.budget
        self._nodes = 0

    @property
    def nodes(self) -> int:
        """Search nodes explored by the last call"""
        return self._nodes

    # ========== decision ==========

    def decide_k_good(self, graph: MultiGraph, forbidden: Iterable[int], k: int) -> SolveReport:
        """
        Decide whether G has a k-good drawing with respect to F.

        Args:
            graph: G
            forbidden: F ⊆ E(G), edges that must stay uncrossed
            k: crossing budget

        Returns:
            SolveReport; verdict unknown when the budget ran out
        """
        forbidden = self._check(graph, forbidden, k)
        started = time.monotonic()
        self._nodes = 0
        bound = lower_bound(graph)

        kernel = kernelize(graph, forbidden)
        blocks = self._nonplanar_blocks(kernel)
        block_bounds = [lower_bound(b.graph) for b in blocks]
        logger.info(
            "deciding k=%d: %d non-planar block(s), lower bounds %s", k, len(blocks), block_bounds
        )

        if sum(block_bounds) > k:
            return self._report(Verdict.NO, k, bound, started, message="lower bound exceeds k")

        configuration: Sequences = {}
        spent = 0
        try:
            for index, block in enumerate(blocks):
                cap = k - spent - sum(block_bounds[index + 1:])
                found = self._minimize_block(block, block_bounds[index], cap)
                if found is None:
                    return self._report(Verdict.NO, k, bound, started)
                spent += crossing_count(found)
                configuration.update(found)
        except SearchExhausted:
            logger.warning("search budget exhausted after %d nodes", self._nodes)
            return self._report(Verdict.UNKNOWN, k, bound, started, message="budget exhausted")

        witness = self._lower(graph, forbidden, kernel, configuration, subdivision_count(k))
        self._audit(graph, forbidden, witness, k)
        return self._report(Verdict.YES, k, bound, started, witness=witness)

    def crossing_number(self, graph: MultiGraph) -> Tuple[int, CrossingWitness]:
        """
        Exact crossing number with a witness at the optimum.

        Each non-planar block is solved for budgets lower_bound, lower_bound+1, ...
        until a planarizing configuration appears.

        Returns:
            (cr(G), witness)
        """
        self._nodes = 0
        kernel = kernelize(graph)
        blocks = self._nonplanar_blocks(kernel)
        configuration: Sequences = {}
        total = 0
        settled = 0
        try:
            for block in blocks:
                block_bound = lower_bound(block.graph)
                ceiling = _independent_pairs(block.graph)
                found = self._minimize_block(block, block_bound, ceiling)
                if found is None:
                    raise GraphError("block has no planarizing configuration")
                total += crossing_count(found)
                settled += 1
                configuration.update(found)
        except SearchExhausted:
            known = total + sum(lower_bound(b.graph) for b in blocks[settled:])
            raise BudgetExceeded(
                f"crossing number search exhausted after {self._nodes} nodes",
                nodes=self._nodes,
                lower=max(known, lower_bound(graph)),
            ) from None

        witness = self._lower(graph, frozenset(), kernel, configuration, subdivision_count(total))
        self._audit(graph, frozenset(), witness, total)
        logger.info("crossing number %d after %d nodes", total, self._nodes)
        return total, witness

    # ========== naive oracle ==========

    def decide_naive(self, graph: MultiGraph, forbidden: Iterable[int], k: int) -> SolveReport:
        """
        Plain enumeration of pair sets on G̃ with no pruning.

        Every set of l ≤ k pairs over pairwise distinct non-forbidden edges of
        G̃ is tried in order; the first planar planarization answers yes.

        Args:
            graph: G
            forbidden: F
            k: crossing budget

        Returns:
            SolveReport (method "naive"); unknown when the candidate budget runs out
        """
        forbidden = self._check(graph, forbidden, k)
        started = time.monotonic()
        bound = lower_bound(graph)
        sub = subdivide(graph, forbidden, subdivision_count(k))
        eligible = [e for e in sub.graph.edge_ids() if e not in sub.forbidden]
        all_pairs = list(itertools.combinations(eligible, 2))

        tried = 0
        limit = self.solver_config.naive_max_candidates
        for size in range(k + 1):
            for pairs in itertools.combinations(all_pairs, size):
                used = [e for pair in pairs for e in pair]
                if len(set(used)) != len(used):
                    continue
                tried += 1
                if tried > limit:
                    return SolveReport(
                        verdict=Verdict.UNKNOWN, k=k, lower_bound=bound, nodes=tried,
                        method="naive", message="candidate budget exhausted",
                    )
                if planar_verdict(crossed_sequence(sub.graph, pairs).graph):
                    witness = witness_from_pairs(sub, list(pairs))
                    return SolveReport(
                        verdict=Verdict.YES, k=k, witness=witness, lower_bound=bound,
                        nodes=tried, method="naive",
                        elapsed_seconds=round(time.monotonic() - started, 6),
                    )
        return SolveReport(
            verdict=Verdict.NO, k=k, lower_bound=bound, nodes=tried, method="naive",
            elapsed_seconds=round(time.monotonic() - started, 6),
        )

    # ========== helpers ==========

    def _check(self, graph: MultiGraph, forbidden: Iterable[int], k: int) -> FrozenSet[int]:
        if k < 0:
            raise GraphError(f"crossing budget must be non-negative, got {k}")
        forbidden = frozenset(forbidden)
        check_edge_set(graph, forbidden)
        return forbidden

    def _nonplanar_blocks(self, kernel: Kernel) -> List[_Block]:
        graph = kernel.graph
        blocks = []
        for nodes in nx.biconnected_components(graph.simple_view()):
            sub = graph.subgraph(nodes)
            if not planar_verdict(sub):
                blocks.append(_Block(sub, kernel.forbidden & frozenset(sub.edge_ids())))
        return sorted(blocks, key=lambda b: min(b.graph.vertices))

    def _minimize_block(self, block: _Block, start: int, cap: int) -> Optional[Sequences]:
        """Fewest crossings (between start and cap) that make the block planar"""
        for budget in range(max(start, 1), cap + 1):
            logger.debug("block of %d vertices: trying %d crossing(s)", block.graph.num_vertices, budget)
            if self.solver_config.workers > 1:
                found, nodes = parallel_search(
                    block.graph, block.forbidden, self.budget, budget, self.solver_config.workers
                )
                self._nodes += nodes
            else:
                search = ConfigurationSearch(block.graph, block.forbidden, self.budget)
                try:
                    found = search.search(budget)
                finally:
                    self._nodes += search.nodes
            if found is not None:
                return found
        return None

    def _lower(
        self,
        graph: MultiGraph,
        forbidden: FrozenSet[int],
        kernel: Kernel,
        configuration: Sequences,
        t: int,
    ) -> CrossingWitness:
        """Place the q-th crossing of a kernel edge on piece q of one crossable original edge"""
        sub = subdivide(graph, forbidden, t)
        pairs = []
        for e, partners in configuration.items():
            for q, p in enumerate(partners):
                if e > p:
                    continue
                r = configuration[p].index(e)
                pairs.append(tuple(sorted((self._piece(kernel, forbidden, e, q, t), self._piece(kernel, forbidden, p, r, t)))))
        return witness_from_pairs(sub, pairs)

    @staticmethod
    def _piece(kernel: Kernel, forbidden: FrozenSet[int], edge: int, position: int, t: int) -> Tuple[int, int]:
        original, forward = kernel.crossable_edge(edge, forbidden)
        return original, (position if forward else t - position)

    def _audit(self, graph, forbidden, witness: CrossingWitness, k: int) -> None:
        if not self.solver_config.audit_witnesses:
            return
        issues = validate_crossing_witness(graph, forbidden, witness, k)
        if issues:
            raise InvalidCertificate("solver produced an invalid witness", issues)

    def _report(self, verdict, k, bound, started, witness=None, message=None) -> SolveReport:
        return SolveReport(
            verdict=verdict, k=k, witness=witness, lower_bound=bound, nodes=self._nodes,
            method="search", elapsed_seconds=round(time.monotonic() - started, 6), message=message,
        )


def _independent_pairs(graph: MultiGraph) -> int:
    edges = graph.edge_ids()
    return sum(1 for e, f in itertools.combinations(edges, 2) if not graph.adjacent(e, f))


def witness_from_pairs(sub: Subdivision, pairs) -> CrossingWitness:
    """
    Canonical witness over G̃.

    Pairs may be given as piece ids or as (original edge, piece index) tuples.
    """
    origin = sub.origin()
    resolved = []
    for a, b in pairs:
        ids = [x if isinstance(x, int) else sub.piece(*x) for x in (a, b)]
        resolved.append((min(ids), max(ids)))
    resolved.sort()
    return CrossingWitness(
        pairs=resolved,
        subdivision=sub.to_model(),
        origins=[(origin[a][0], origin[b][0]) for a, b in resolved],
    )


# ========== Module-level shortcuts ==========

def decide_k_good(graph: MultiGraph, forbidden: Iterable[int], k: int) -> SolveReport:
    return CrossingSolver().decide_k_good(graph, forbidden, k)


def crossing_number(graph: MultiGraph) -> Tuple[int, CrossingWitness]:
    return CrossingSolver().crossing_number(graph)


def decide_naive(graph: MultiGraph, forbidden: Iterable[int], k: int) -> SolveReport:
    return CrossingSolver().decide_naive(graph, forbidden, k)
