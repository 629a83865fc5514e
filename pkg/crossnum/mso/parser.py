"""
Text syntax for MSO formulas.

Grammar (lowest precedence first; quantifier bodies extend as far right as
possible, -> associates to the right, & and | to the left):

    formula  := disj ( "->" formula )?
    disj     := conj ( "|" conj )*
    conj     := unary ( "&" unary )*
    unary    := "~" unary | quant | "(" formula ")" | atom
    quant    := ( "EX" | "ALL" ) name [ "." ] formula
    atom     := "V" x | "E" x | "I" x y | X x | x "=" y | x "!=" y | "true" | "false"

Quantifier keywords are case-insensitive (EX, exists, ALL, forall). The
Unicode symbols ¬ ∧ ∨ → ∃ ∀ ≠ are accepted as well, and "#" starts a comment
that runs to the end of the line. Atoms need a space between the relation
and its arguments ("E x", not "Ex").
"""

import re
from typing import List, Tuple

from ..errors import FormulaSyntaxError
from .formula import (
    RESERVED,
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
    is_set_variable,
)

_TOKEN = re.compile(
    r"""
    (?P<space>\s+|\#[^\n]*)
    |(?P<arrow>->|→)
    |(?P<neq>!=|≠)
    |(?P<symbol>[~¬!&∧|∨().:=∃∀])
    |(?P<name>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

_EXISTS = {"ex", "exists"}
_FORALL = {"all", "forall"}
_CANONICAL = {"¬": "~", "!": "~", "∧": "&", "∨": "|", "→": "->", "≠": "!="}

Token = Tuple[str, str, int]


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        value = match.group()
        if kind != "space":
            if kind == "name":
                lowered = value.lower()
                if lowered in _EXISTS:
                    kind, value = "symbol", "∃"
                elif lowered in _FORALL:
                    kind, value = "symbol", "∀"
            tokens.append((kind, _CANONICAL.get(value, value), pos))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    # ---------- token helpers ----------

    def _peek(self, offset: int = 0) -> Token:
        i = self.index + offset
        if i < len(self.tokens):
            return self.tokens[i]
        return ("end", "", len(self.text))

    def _next(self) -> Token:
        token = self._peek()
        self.index += 1
        return token

    def _expect(self, value: str) -> None:
        kind, got, pos = self._next()
        if got != value or kind == "name":
            raise FormulaSyntaxError(f"expected {value!r}, found {got or 'end of input'!r}", pos)

    def _name(self, individual: bool = False) -> str:
        kind, value, pos = self._next()
        if kind != "name":
            raise FormulaSyntaxError(f"expected a variable name, found {value or 'end of input'!r}", pos)
        if value in RESERVED or value.lower() in ("true", "false"):
            raise FormulaSyntaxError(f"{value!r} is reserved", pos)
        if individual and is_set_variable(value):
            raise FormulaSyntaxError(f"expected an individual variable, found set variable {value!r}", pos)
        return value

    # ---------- grammar ----------

    def parse(self) -> Formula:
        formula = self._formula()
        kind, value, pos = self._peek()
        if kind != "end":
            raise FormulaSyntaxError(f"unexpected {value!r}", pos)
        return formula

    def _formula(self) -> Formula:
        left = self._disjunction()
        if self._peek()[1] == "->":
            self._next()
            return Implies(left, self._formula())
        return left

    def _disjunction(self) -> Formula:
        left = self._conjunction()
        while self._peek()[1] == "|":
            self._next()
            left = Or(left, self._conjunction())
        return left

    def _conjunction(self) -> Formula:
        left = self._unary()
        while self._peek()[1] == "&":
            self._next()
            left = And(left, self._unary())
        return left

    def _unary(self) -> Formula:
        kind, value, pos = self._peek()
        if kind == "symbol" and value == "~":
            self._next()
            return Not(self._unary())
        if kind == "symbol" and value in ("∃", "∀"):
            self._next()
            var = self._name()
            if self._peek()[1] in (".", ":"):
                self._next()
            body = self._formula()
            return Exists(var, body) if value == "∃" else ForAll(var, body)
        if kind == "symbol" and value == "(":
            self._next()
            inner = self._formula()
            self._expect(")")
            return inner
        if kind == "name":
            return self._atom()
        raise FormulaSyntaxError(f"unexpected {value or 'end of input'!r}", pos)

    def _atom(self) -> Formula:
        kind, value, pos = self._next()
        lowered = value.lower()
        if lowered == "true":
            return Constant(True)
        if lowered == "false":
            return Constant(False)
        if value == "V":
            return VertexAtom(self._name(individual=True))
        if value == "E":
            return EdgeAtom(self._name(individual=True))
        if value == "I":
            return IncidenceAtom(self._name(individual=True), self._name(individual=True))
        if is_set_variable(value):
            return MemberAtom(self._name(individual=True), value)

        operator = self._peek()[1]
        if operator in ("=", "!="):
            self._next()
            right = self._name(individual=True)
            atom = EqualsAtom(value, right)
            return atom if operator == "=" else Not(atom)
        raise FormulaSyntaxError(f"incomplete atom starting with {value!r}", pos)


def parse(text: str) -> Formula:
    """
    Parse formula text.

    Raises:
        FormulaSyntaxError: with the character position of the problem
    """
    return _Parser(text).parse()


def to_text(formula: Formula) -> str:
    """Fully parenthesized ASCII rendering; parse(to_text(f)) == f"""
    if isinstance(formula, VertexAtom):
        return f"V {formula.var}"
    if isinstance(formula, EdgeAtom):
        return f"E {formula.var}"
    if isinstance(formula, IncidenceAtom):
        return f"I {formula.vertex} {formula.edge}"
    if isinstance(formula, MemberAtom):
        return f"{formula.set_var} {formula.var}"
    if isinstance(formula, EqualsAtom):
        return f"{formula.left} = {formula.right}"
    if isinstance(formula, Constant):
        return "true" if formula.value else "false"
    if isinstance(formula, Not):
        return f"~{to_text(formula.body)}"
    if isinstance(formula, And):
        return f"({to_text(formula.left)} & {to_text(formula.right)})"
    if isinstance(formula, Or):
        return f"({to_text(formula.left)} | {to_text(formula.right)})"
    if isinstance(formula, Implies):
        return f"({to_text(formula.left)} -> {to_text(formula.right)})"
    if isinstance(formula, Exists):
        return f"(EX {formula.var}. {to_text(formula.body)})"
    if isinstance(formula, ForAll):
        return f"(ALL {formula.var}. {to_text(formula.body)})"
    raise TypeError(f"not a formula: {formula!r}")
