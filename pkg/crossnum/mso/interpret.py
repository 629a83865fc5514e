"""
Syntactic interpretation of the crossed graph G^{e1×e2} inside G.

For distinct edges e1, e2 (the values of the parameters x1, x2), the universe
of G^{e1×e2} is encoded in the universe of G with a tag per element:

    B   an element u of U^G other than e1, e2, represented by u itself
    X   the new crossing vertex; the representing value is irrelevant
    N1  the new edge joining the crossing vertex to the endpoint v of e1,
        represented by the vertex v
    N2  the same for e2

An individual variable y of φ becomes the variable y of φ* together with a
tag fixed at compile time: every quantifier ∃y splits into one disjunct per
tag (∀y into one conjunct per tag), each guarded by the condition that makes
the representation valid:

    B   ¬ y = x1 ∧ ¬ y = x2
    N1  V y ∧ I y x1
    N2  V y ∧ I y x2

A set variable Y of φ becomes four set variables Y_B, Y_X, Y_N1, Y_N2 of G:
y ∈ Y holds for a B-tagged y iff y ∈ Y_B, for the crossing vertex iff
x1 ∈ Y_X, and for an Ni-tagged y iff y ∈ Y_Ni.

Free variables of φ keep their meaning from G: free individuals are B-tagged
and free sets contain no new element (their Y_X, Y_N1, Y_N2 parts are
empty). This is exactly the situation of a forbidden edge set F ⊆ E^G∖{e1, e2}.
"""

import logging
from typing import Dict

from ..errors import VariableError
from .formula import (
    FALSE,
    TRUE,
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
    all_variables,
    bound_variables,
    conjunction,
    disjunction,
    fresh_name,
    free_variables,
    is_set_variable,
    simplify,
)

logger = logging.getLogger(__name__)

BASE, CROSSING, NEW1, NEW2 = "B", "X", "N1", "N2"
TAGS = (BASE, CROSSING, NEW1, NEW2)


class CrossedInterpretation:
    """Compiles φ into φ*(x1, x2) over G"""

    def __init__(self, x1: str, x2: str, taken):
        self.x1 = x1
        self.x2 = x2
        self._taken = set(taken) | {x1, x2}

    def translate(self, formula: Formula) -> Formula:
        tags = {name: BASE for name in free_variables(formula) if not is_set_variable(name)}
        return self._translate(formula, tags, {})

    # ---------- helpers ----------

    def _set_parts(self, name: str) -> Dict[str, str]:
        """Fresh G-set names for one bound set variable occurrence"""
        parts = {}
        for tag in TAGS:
            part = fresh_name(f"{name}_{tag}", self._taken)
            self._taken.add(part)
            parts[tag] = part
        return parts

    def _guard(self, var: str, tag: str) -> Formula:
        if tag == BASE:
            return And(Not(EqualsAtom(var, self.x1)), Not(EqualsAtom(var, self.x2)))
        param = self.x1 if tag == NEW1 else self.x2
        return And(VertexAtom(var), IncidenceAtom(var, param))

    # ---------- translation ----------

    def _translate(self, node: Formula, tags: Dict[str, str], sets: Dict[str, Dict[str, str]]) -> Formula:
        if isinstance(node, Constant):
            return node
        if isinstance(node, Not):
            return Not(self._translate(node.body, tags, sets))
        if isinstance(node, (And, Or, Implies)):
            return type(node)(
                self._translate(node.left, tags, sets), self._translate(node.right, tags, sets)
            )
        if isinstance(node, (Exists, ForAll)):
            return self._quantifier(node, tags, sets)
        return self._atom(node, tags, sets)

    def _quantifier(self, node, tags, sets) -> Formula:
        existential = isinstance(node, Exists)
        wrap = Exists if existential else ForAll
        var = node.var

        if is_set_variable(var):
            parts = self._set_parts(var)
            body = self._translate(node.body, tags, {**sets, var: parts})
            for tag in reversed(TAGS):
                body = wrap(parts[tag], body)
            return body

        # the crossing vertex: y's own value is never read
        crossing_case = self._translate(node.body, {**tags, var: CROSSING}, sets)
        cases = []
        for tag in (BASE, NEW1, NEW2):
            body = self._translate(node.body, {**tags, var: tag}, sets)
            guard = self._guard(var, tag)
            cases.append(And(guard, body) if existential else Implies(guard, body))
        combined = disjunction(cases) if existential else conjunction(cases)
        if existential:
            return Or(crossing_case, wrap(var, combined))
        return And(crossing_case, wrap(var, combined))

    def _atom(self, node, tags: Dict[str, str], sets) -> Formula:
        if isinstance(node, VertexAtom):
            tag = tags[node.var]
            return node if tag == BASE else Constant(tag == CROSSING)
        if isinstance(node, EdgeAtom):
            tag = tags[node.var]
            return node if tag == BASE else Constant(tag in (NEW1, NEW2))
        if isinstance(node, IncidenceAtom):
            return self._incidence(node, tags[node.vertex], tags[node.edge])
        if isinstance(node, MemberAtom):
            return self._member(node, tags[node.var], sets.get(node.set_var))
        if isinstance(node, EqualsAtom):
            left, right = tags[node.left], tags[node.right]
            if left != right:
                return FALSE
            return TRUE if left == CROSSING else node
        raise TypeError(f"not a formula: {node!r}")

    @staticmethod
    def _incidence(node: IncidenceAtom, vertex_tag: str, edge_tag: str) -> Formula:
        if edge_tag in (NEW1, NEW2):
            if vertex_tag == CROSSING:
                return TRUE
            if vertex_tag == BASE:
                # the new edge at v joins v and the crossing vertex
                return EqualsAtom(node.vertex, node.edge)
            return FALSE
        if vertex_tag == BASE and edge_tag == BASE:
            return node
        return FALSE

    def _member(self, node: MemberAtom, tag: str, parts) -> Formula:
        if parts is None:
            # free set: only old elements can belong to it
            return node if tag == BASE else FALSE
        if tag == CROSSING:
            return MemberAtom(self.x1, parts[CROSSING])
        return MemberAtom(node.var, parts[tag])


def interpret_crossed(formula: Formula, x1: str = "x1", x2: str = "x2", fold: bool = True) -> Formula:
    """
    Build φ*(x1, x2) with G ⊨ φ*(e1, e2, F) iff G^{e1×e2} ⊨ φ(F).

    Args:
        formula: φ
        x1, x2: names of the two edge parameters
        fold: apply constant folding to the result

    Raises:
        VariableError: a parameter name is bound or free in φ, or not an individual name
    """
    for name in (x1, x2):
        if is_set_variable(name):
            raise VariableError(f"parameter {name!r} must be an individual variable")
        if name in bound_variables(formula):
            raise VariableError(f"parameter {name!r} is bound in the formula")
        if name in free_variables(formula):
            raise VariableError(f"parameter {name!r} already occurs free in the formula")
    if x1 == x2:
        raise VariableError("the two parameters must be different variables")

    result = CrossedInterpretation(x1, x2, all_variables(formula)).translate(formula)
    if fold:
        result = simplify(result)
    logger.debug("interpreted formula over (%s, %s)", x1, x2)
    return result
