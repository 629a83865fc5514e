"""Utils package initialization"""

from .validators import audit_topological_embedding, validate_crossing_witness

__all__ = [
    "audit_topological_embedding",
    "validate_crossing_witness",
]
