"""Planarity package initialization"""

from .planarity import KuratowskiWitness, RotationSystem, is_planar, planar_verdict, verify_witness

__all__ = [
    "KuratowskiWitness",
    "RotationSystem",
    "is_planar",
    "planar_verdict",
    "verify_witness",
]
