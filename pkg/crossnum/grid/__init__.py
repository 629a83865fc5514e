"""Grid package initialization"""

from .hexgrid import HexGrid, hex_grid, planted_grid
from .embedding import (
    attachments,
    audit_embedding,
    embed_grid,
    grid_embedding_from,
    identity_embedding,
    is_flat,
)
from .reduction import FlatGridReducer, forbidden_rings, lift_witness, reduce, reduce_loop

__all__ = [
    "HexGrid",
    "hex_grid",
    "planted_grid",
    "attachments",
    "audit_embedding",
    "embed_grid",
    "grid_embedding_from",
    "identity_embedding",
    "is_flat",
    "FlatGridReducer",
    "forbidden_rings",
    "lift_witness",
    "reduce",
    "reduce_loop",
]
