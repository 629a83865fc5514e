"""MSO package initialization"""

from .formula import free_variables, simplify, size
from .parser import parse, to_text
from .evaluator import MSOEvaluator, evaluate, find_assignment
from .interpret import interpret_crossed
from .builders import CONNECTED, EDGES_HAVE_TWO_ENDS, TWO_COLORABLE, ChiFamily, build_chi

__all__ = [
    "free_variables",
    "simplify",
    "size",
    "parse",
    "to_text",
    "MSOEvaluator",
    "evaluate",
    "find_assignment",
    "interpret_crossed",
    "CONNECTED",
    "EDGES_HAVE_TWO_ENDS",
    "TWO_COLORABLE",
    "ChiFamily",
    "build_chi",
]
