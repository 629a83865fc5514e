"""
crossnum: exact crossing numbers for small k

Decides whether a graph has a drawing with at most k crossings that avoids a
set of forbidden edges, computes crossing numbers with checkable certificates,
contracts flat hexagonal grids, realizes and audits drawings, and evaluates
monadic second-order formulas on small graphs.
"""

__version__ = "1.0.0"
__author__ = "crossnum developers"
