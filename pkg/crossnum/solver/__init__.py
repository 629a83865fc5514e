"""Solver package initialization"""

from .bounds import lower_bound
from .crossing_solver import (
    CrossingSolver,
    crossing_number,
    decide_k_good,
    decide_naive,
    subdivision_count,
    witness_from_pairs,
)

__all__ = [
    "lower_bound",
    "CrossingSolver",
    "crossing_number",
    "decide_k_good",
    "decide_naive",
    "subdivision_count",
    "witness_from_pairs",
]
