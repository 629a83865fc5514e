"""Drawing package initialization"""

from .realize import DrawingRealizer, realize
from .validate import DrawingValidator, validate
from .svg import SvgExporter, emit_svg

__all__ = [
    "DrawingRealizer",
    "realize",
    "DrawingValidator",
    "validate",
    "SvgExporter",
    "emit_svg",
]
