"""
Standard sentences and the crossing-guess formula family.

With base standing in for planarity, the family is

    ψ_1(x1, x2, Y)     := base*(x1, x2)
    φ_l(Y)             := ∃p ∃q (p ≠ q ∧ E p ∧ E q ∧ ¬Y p ∧ ¬Y q ∧ ψ_l(p, q, Y))
    ψ_{l+1}(p', q', Y) := φ_l*(p', q', Y)
    χ_l(p, q, Y)       := p ≠ q ∧ E p ∧ E q ∧ ¬Y p ∧ ¬Y q ∧ ψ_l(p, q, Y)

Level j uses the parameter pair (x{2j-1}, x{2j}) so that no starred step
captures a variable bound one level down.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Tuple

from ..errors import VariableError
from .formula import (
    EdgeAtom,
    Exists,
    Formula,
    MemberAtom,
    Not,
    all_variables,
    conjunction,
    fresh_name,
    free_variables,
    not_equal,
    size,
)
from .interpret import interpret_crossed
from .parser import parse

logger = logging.getLogger(__name__)

FORBIDDEN_SET = "Y"

TWO_COLORABLE = parse(
    """
    # two colour classes X and Z cover the vertices, adjacent vertices differ
    EX X. EX Z. (
        (ALL x. (V x -> (X x | Z x)))
      & (ALL x. ALL y. ((x != y & (EX z. (E z & I x z & I y z)))
                        -> ~((X x & X y) | (Z x & Z y))))
    )
    """
)

CONNECTED = parse(
    """
    # every vertex set holding some but not all vertices is left by an edge
    ALL X. (((EX x. (V x & X x)) & (EX y. (V y & ~X y)))
            -> (EX z. (E z & (EX u. (I u z & X u)) & (EX w. (I w z & ~X w)))))
    """
)

EDGES_HAVE_TWO_ENDS = parse(
    "ALL z. (E z -> (EX u. EX w. (u != w & I u z & I w z)))"
)


def guard(p: str, q: str, forbidden: str = FORBIDDEN_SET) -> Formula:
    """p ≠ q ∧ E p ∧ E q ∧ ¬Y p ∧ ¬Y q"""
    return conjunction([
        not_equal(p, q),
        EdgeAtom(p),
        EdgeAtom(q),
        Not(MemberAtom(p, forbidden)),
        Not(MemberAtom(q, forbidden)),
    ])


@dataclass(frozen=True)
class ChiFamily:
    """ψ_j and φ_j for j ≤ l plus χ_l"""

    level: int
    parameters: Dict[int, Tuple[str, str]]
    psi: Dict[int, Formula]
    phi: Dict[int, Formula]
    chi: Formula
    sizes: Dict[str, int] = field(default_factory=dict)


def build_chi(level: int, base: Formula, forbidden: str = FORBIDDEN_SET) -> ChiFamily:
    """
    Build ψ_1..ψ_l, φ_1..φ_l and χ_l from a base sentence.

    Args:
        level: l ≥ 1
        base: sentence playing the role of the planarity sentence
        forbidden: name of the free set variable holding F

    Returns:
        ChiFamily with per-formula AST sizes in sizes
    """
    if level < 1:
        raise VariableError(f"level must be at least 1, got {level}")
    if free_variables(base):
        raise VariableError(f"base must be a sentence, free variables {sorted(free_variables(base))}")

    taken = set(all_variables(base)) | {forbidden}
    parameters: Dict[int, Tuple[str, str]] = {}
    for j in range(1, level + 1):
        p = fresh_name(f"x{2 * j - 1}", taken)
        taken.add(p)
        q = fresh_name(f"x{2 * j}", taken)
        taken.add(q)
        parameters[j] = (p, q)

    psi: Dict[int, Formula] = {}
    phi: Dict[int, Formula] = {}
    sizes: Dict[str, int] = {}
    psi[1] = interpret_crossed(base, *parameters[1])
    for j in range(1, level + 1):
        if j > 1:
            psi[j] = interpret_crossed(phi[j - 1], *parameters[j])
        p, q = parameters[j]
        phi[j] = Exists(p, Exists(q, conjunction([guard(p, q, forbidden), psi[j]])))
        sizes[f"psi_{j}"] = size(psi[j])
        sizes[f"phi_{j}"] = size(phi[j])

    p, q = parameters[level]
    chi = conjunction([guard(p, q, forbidden), psi[level]])
    sizes[f"chi_{level}"] = size(chi)
    logger.info("built crossing formulas up to level %d: sizes %s", level, sizes)
    return ChiFamily(level, parameters, psi, phi, chi, sizes)
