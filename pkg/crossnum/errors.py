"""
Exception hierarchy for the crossing-number toolkit.
Every message names the offending input element (edge id, vertex id, line, position).
"""

from typing import Optional


class CrossnumError(Exception):
    """Base class for all toolkit errors"""


class GraphError(CrossnumError, ValueError):
    """Malformed graph input or reference to an unknown vertex/edge"""


class InvalidCertificate(CrossnumError, ValueError):
    """A witness, embedding or drawing failed its audit"""

    def __init__(self, message: str, violations: Optional[list] = None):
        super().__init__(message)
        self.violations = list(violations or [])


class EmbeddingError(CrossnumError, ValueError):
    """Grid embedding is not flat or does not describe the expected structure"""


class BudgetExceeded(CrossnumError):
    """A search ran out of its node or time budget"""

    def __init__(
        self,
        message: str,
        nodes: int = 0,
        lower: Optional[int] = None,
        upper: Optional[int] = None,
    ):
        super().__init__(message)
        self.nodes = nodes
        self.lower = lower
        self.upper = upper


class FormulaSyntaxError(CrossnumError, ValueError):
    """MSO formula text could not be parsed"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class VariableError(CrossnumError, ValueError):
    """Unbound free variable or variable capture in an MSO formula"""


class DrawingError(CrossnumError):
    """A realized drawing failed its own geometric audit"""

    def __init__(self, message: str, violations: Optional[list] = None):
        super().__init__(message)
        self.violations = list(violations or [])
