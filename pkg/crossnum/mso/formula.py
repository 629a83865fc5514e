"""
Abstract syntax of monadic second-order formulas over graphs.

The structure of a graph G has universe U = V ∪ E and the relations V, E and
I (vertex-edge incidence). Individual variables start with a lower-case
letter and range over U; set variables start with an upper-case letter and
range over subsets of U. The names V, E and I are reserved for the relations.
"""

import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Union

from ..errors import VariableError

RESERVED = frozenset({"V", "E", "I"})


def is_set_variable(name: str) -> bool:
    return name[:1].isupper()


def check_individual(name: str) -> str:
    if not name or is_set_variable(name):
        raise VariableError(f"{name!r} is not an individual variable name")
    return name


def check_set(name: str) -> str:
    if not is_set_variable(name) or name in RESERVED:
        raise VariableError(f"{name!r} is not a set variable name")
    return name


# ========== Atoms ==========

@dataclass(frozen=True)
class VertexAtom:
    """V x"""
    var: str


@dataclass(frozen=True)
class EdgeAtom:
    """E x"""
    var: str


@dataclass(frozen=True)
class IncidenceAtom:
    """I x y: x is a vertex, y an edge, and x is an endpoint of y"""
    vertex: str
    edge: str


@dataclass(frozen=True)
class MemberAtom:
    """X x"""
    var: str
    set_var: str


@dataclass(frozen=True)
class EqualsAtom:
    left: str
    right: str


@dataclass(frozen=True)
class Constant:
    value: bool


# ========== Connectives and quantifiers ==========

@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class ForAll:
    var: str
    body: "Formula"


Atom = Union[VertexAtom, EdgeAtom, IncidenceAtom, MemberAtom, EqualsAtom, Constant]
Formula = Union[Atom, Not, And, Or, Implies, Exists, ForAll]
BINARY = (And, Or, Implies)
QUANTIFIERS = (Exists, ForAll)

TRUE = Constant(True)
FALSE = Constant(False)


# ========== Builders ==========

def conjunction(parts: Iterable[Formula]) -> Formula:
    """Right-nested conjunction; true for no parts"""
    parts = list(parts)
    if not parts:
        return TRUE
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = And(part, result)
    return result


def disjunction(parts: Iterable[Formula]) -> Formula:
    parts = list(parts)
    if not parts:
        return FALSE
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = Or(part, result)
    return result


def not_equal(left: str, right: str) -> Formula:
    return Not(EqualsAtom(left, right))


# ========== Traversal ==========

def atom_variables(atom: Atom) -> tuple:
    if isinstance(atom, (VertexAtom, EdgeAtom)):
        return (atom.var,)
    if isinstance(atom, IncidenceAtom):
        return (atom.vertex, atom.edge)
    if isinstance(atom, MemberAtom):
        return (atom.var, atom.set_var)
    if isinstance(atom, EqualsAtom):
        return (atom.left, atom.right)
    return ()


def free_variables(formula: Formula) -> FrozenSet[str]:
    """Variables with an occurrence outside the scope of any quantifier binding them"""
    if isinstance(formula, Not):
        return free_variables(formula.body)
    if isinstance(formula, BINARY):
        return free_variables(formula.left) | free_variables(formula.right)
    if isinstance(formula, QUANTIFIERS):
        return free_variables(formula.body) - {formula.var}
    return frozenset(atom_variables(formula))


def bound_variables(formula: Formula) -> FrozenSet[str]:
    return frozenset(q.var for q in subformulas(formula) if isinstance(q, QUANTIFIERS))


def all_variables(formula: Formula) -> FrozenSet[str]:
    names = set()
    for node in subformulas(formula):
        if isinstance(node, QUANTIFIERS):
            names.add(node.var)
        elif not isinstance(node, (Not,) + BINARY):
            names.update(atom_variables(node))
    return frozenset(names)


def subformulas(formula: Formula) -> Iterator[Formula]:
    """Pre-order walk"""
    stack = [formula]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, (Not,) + QUANTIFIERS):
            stack.append(node.body)
        elif isinstance(node, BINARY):
            stack.append(node.right)
            stack.append(node.left)


def size(formula: Formula) -> int:
    """Number of AST nodes"""
    return sum(1 for _ in subformulas(formula))


def quantifier_depth(formula: Formula) -> int:
    if isinstance(formula, Not):
        return quantifier_depth(formula.body)
    if isinstance(formula, BINARY):
        return max(quantifier_depth(formula.left), quantifier_depth(formula.right))
    if isinstance(formula, QUANTIFIERS):
        return 1 + quantifier_depth(formula.body)
    return 0


def is_sentence(formula: Formula) -> bool:
    return not free_variables(formula)


def fresh_name(base: str, taken: Iterable[str]) -> str:
    """base itself if unused, otherwise base2, base3, ..."""
    taken = set(taken)
    if base not in taken and base not in RESERVED:
        return base
    for i in itertools.count(2):
        name = f"{base}{i}"
        if name not in taken:
            return name
    raise AssertionError("unreachable")


# ========== Constant folding ==========

def simplify(formula: Formula) -> Formula:
    """
    Fold true/false constants bottom-up.

    Individual quantifiers are folded only where the result holds for an
    empty universe too; set quantifiers always have a value to range over,
    so vacuous ones are dropped.
    """
    if isinstance(formula, Not):
        body = simplify(formula.body)
        if isinstance(body, Constant):
            return Constant(not body.value)
        if isinstance(body, Not):
            return body.body
        return Not(body)

    if isinstance(formula, BINARY):
        left, right = simplify(formula.left), simplify(formula.right)
        if isinstance(formula, And):
            if left == FALSE or right == FALSE:
                return FALSE
            if left == TRUE:
                return right
            if right == TRUE:
                return left
            return And(left, right)
        if isinstance(formula, Or):
            if left == TRUE or right == TRUE:
                return TRUE
            if left == FALSE:
                return right
            if right == FALSE:
                return left
            return Or(left, right)
        if left == FALSE or right == TRUE:
            return TRUE
        if left == TRUE:
            return right
        if right == FALSE:
            return simplify(Not(left))
        return Implies(left, right)

    if isinstance(formula, QUANTIFIERS):
        body = simplify(formula.body)
        if isinstance(body, Constant):
            if isinstance(formula, Exists) and (not body.value or is_set_variable(formula.var)):
                return body
            if isinstance(formula, ForAll) and (body.value or is_set_variable(formula.var)):
                return body
        if is_set_variable(formula.var) and formula.var not in free_variables(body):
            return body
        return type(formula)(formula.var, body)

    return formula
