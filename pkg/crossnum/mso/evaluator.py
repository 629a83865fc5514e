"""
Naive MSO model checking over the two-sorted structure of a multigraph.

Individual quantifiers loop over U in increasing order. Set quantifiers do
not enumerate all 2^|U| subsets up front: membership bits are decided lazily
the first time a membership atom asks for them, and the owning quantifier
branches on that bit (true first). A body that finishes without asking for a
bit has the same value for every choice of it.
"""

import itertools
import logging
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Sequence, Union

from ..config import MSOConfig, config
from ..errors import BudgetExceeded, VariableError
from ..graphs.multigraph import MultiGraph
from .formula import (
    And,
    Constant,
    EdgeAtom,
    EqualsAtom,
    Exists,
    ForAll,
    Formula,
    Implies,
    IncidenceAtom,
    MemberAtom,
    Not,
    Or,
    VertexAtom,
    free_variables,
    is_set_variable,
    subformulas,
)

logger = logging.getLogger(__name__)

Value = Union[int, FrozenSet[int]]


class _LazySet:
    """Set variable value whose bits are fixed on demand"""

    __slots__ = ("bits",)

    def __init__(self):
        self.bits: Dict[int, bool] = {}

    def materialize(self) -> FrozenSet[int]:
        return frozenset(x for x, bit in self.bits.items() if bit)


class _PendingBit(Exception):
    def __init__(self, owner: _LazySet, element: int):
        super().__init__(element)
        self.owner = owner
        self.element = element


class MSOEvaluator:
    """Evaluates formulas on one graph"""

    def __init__(self, graph: MultiGraph, mso_config: Optional[MSOConfig] = None):
        self.graph = graph
        self.mso_config = mso_config or config.mso
        self.universe = sorted(graph.universe())
        self.steps = 0

    # ---------- public ----------

    def evaluate(self, formula: Formula, assignment: Optional[Mapping[str, Value]] = None) -> bool:
        """
        Decide (G, α) ⊨ φ.

        Args:
            formula: φ
            assignment: α; only its values at the free variables of φ are read

        Returns:
            Truth value

        Raises:
            VariableError: a free variable is unbound or has a value of the wrong sort
            BudgetExceeded: universe too large for set quantifiers or step budget spent
        """
        env = self._environment(formula, assignment or {})
        self._check_universe(formula)
        self.steps = 0
        return self._eval(formula, env)

    def find_assignment(
        self,
        formula: Formula,
        variables: Sequence[str],
        assignment: Optional[Mapping[str, Value]] = None,
    ) -> Optional[Dict[str, Value]]:
        """
        Extend α on the given variables so that φ holds.

        Individual variables are tried in increasing order; set variables are
        decided lazily and undecided elements are left out.

        Returns:
            The values chosen for variables, or None when no extension works
        """
        base = dict(assignment or {})
        for name in variables:
            base.pop(name, None)
        individuals = [v for v in variables if not is_set_variable(v)]
        sets = [v for v in variables if is_set_variable(v)]

        env = self._environment(formula, base, skip=set(variables))
        self._check_universe(formula, force=bool(sets))
        self.steps = 0
        for values in itertools.product(self.universe, repeat=len(individuals)):
            env.update(zip(individuals, values))
            lazy = {name: _LazySet() for name in sets}
            env.update(lazy)
            if self._satisfy(formula, env, list(lazy.values())):
                chosen: Dict[str, Value] = dict(zip(individuals, values))
                chosen.update({name: lazy[name].materialize() for name in sets})
                return chosen
        return None

    # ---------- setup ----------

    def _environment(self, formula: Formula, assignment: Mapping[str, Value], skip=()) -> dict:
        env = {}
        universe = set(self.universe)
        for name in sorted(free_variables(formula) - set(skip)):
            if name not in assignment:
                raise VariableError(f"free variable {name!r} has no value")
            value = assignment[name]
            if is_set_variable(name):
                env[name] = frozenset(value)
            else:
                if value not in universe:
                    raise VariableError(f"value {value!r} of variable {name!r} is not in the universe")
                env[name] = value
        return env

    def _check_universe(self, formula: Formula, force: bool = False) -> None:
        has_sets = force or any(
            isinstance(node, (Exists, ForAll)) and is_set_variable(node.var) for node in subformulas(formula)
        )
        limit = self.mso_config.max_universe
        if has_sets and len(self.universe) > limit:
            raise BudgetExceeded(
                f"universe of {len(self.universe)} elements exceeds the set-quantifier limit {limit}"
            )

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.mso_config.max_steps:
            raise BudgetExceeded(f"evaluation exceeded {self.mso_config.max_steps} steps", nodes=self.steps)

    # ---------- evaluation ----------

    def _eval(self, node: Formula, env: dict) -> bool:
        self._tick()
        if isinstance(node, VertexAtom):
            return self.graph.has_vertex(env[node.var])
        if isinstance(node, EdgeAtom):
            return self.graph.has_edge(env[node.var])
        if isinstance(node, IncidenceAtom):
            v, e = env[node.vertex], env[node.edge]
            return self.graph.has_vertex(v) and self.graph.has_edge(e) and v in self.graph.endpoints(e)
        if isinstance(node, MemberAtom):
            return self._member(env[node.var], env[node.set_var])
        if isinstance(node, EqualsAtom):
            return env[node.left] == env[node.right]
        if isinstance(node, Constant):
            return node.value
        if isinstance(node, Not):
            return not self._eval(node.body, env)
        if isinstance(node, And):
            return self._eval(node.left, env) and self._eval(node.right, env)
        if isinstance(node, Or):
            return self._eval(node.left, env) or self._eval(node.right, env)
        if isinstance(node, Implies):
            return (not self._eval(node.left, env)) or self._eval(node.right, env)
        if isinstance(node, (Exists, ForAll)):
            return self._quantify(node, env)
        raise TypeError(f"not a formula: {node!r}")

    @staticmethod
    def _member(element: int, value) -> bool:
        if isinstance(value, _LazySet):
            bit = value.bits.get(element)
            if bit is None:
                raise _PendingBit(value, element)
            return bit
        return element in value

    def _quantify(self, node, env: dict) -> bool:
        existential = isinstance(node, Exists)
        missing = object()
        saved = env.get(node.var, missing)
        try:
            if is_set_variable(node.var):
                lazy = _LazySet()
                env[node.var] = lazy
                return self._branch(node.body, env, lazy, existential)
            for value in self.universe:
                env[node.var] = value
                if self._eval(node.body, env) == existential:
                    return existential
            return not existential
        finally:
            if saved is missing:
                env.pop(node.var, None)
            else:
                env[node.var] = saved

    def _branch(self, body: Formula, env: dict, lazy: _LazySet, existential: bool) -> bool:
        try:
            return self._eval(body, env)
        except _PendingBit as pending:
            if pending.owner is not lazy:
                raise
            element = pending.element
        for bit in (True, False):
            lazy.bits[element] = bit
            try:
                if self._branch(body, env, lazy, existential) == existential:
                    return existential
            finally:
                del lazy.bits[element]
        return not existential

    def _satisfy(self, formula: Formula, env: dict, owned: list) -> bool:
        """Existential search over several lazy sets; leaves the winning bits in place"""
        try:
            return self._eval(formula, env)
        except _PendingBit as pending:
            if not any(pending.owner is lazy for lazy in owned):
                raise
            lazy, element = pending.owner, pending.element
        for bit in (True, False):
            lazy.bits[element] = bit
            if self._satisfy(formula, env, owned):
                return True
            del lazy.bits[element]
        return False


# ========== Module-level shortcuts ==========

def evaluate(graph: MultiGraph, formula: Formula, assignment: Optional[Mapping[str, Value]] = None) -> bool:
    return MSOEvaluator(graph).evaluate(formula, assignment)


def find_assignment(
    graph: MultiGraph,
    formula: Formula,
    variables: Iterable[str],
    assignment: Optional[Mapping[str, Value]] = None,
) -> Optional[Dict[str, Value]]:
    return MSOEvaluator(graph).find_assignment(formula, list(variables), assignment)
