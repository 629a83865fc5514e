"""
SVG export of drawings via drawsvg.

Output depends only on the Drawing and the DrawingConfig, so identical inputs
give identical bytes.
"""

from typing import Iterable, Optional

import drawsvg as draw

from ..config import DrawingConfig, config
from ..schemas import Drawing


class SvgExporter:
    """Renders vertices, edge polylines and crossing markers"""

    def __init__(self, drawing_config: Optional[DrawingConfig] = None):
        self.drawing_config = drawing_config or config.drawing

    def render(self, drawing: Drawing, forbidden: Iterable[int] = ()) -> draw.Drawing:
        cfg = self.drawing_config
        forbidden = frozenset(forbidden)
        xs = [p[0] for p in drawing.vertices.values()] + [p[0] for line in drawing.edges.values() for p in line]
        ys = [p[1] for p in drawing.vertices.values()] + [p[1] for line in drawing.edges.values() for p in line]
        max_x, max_y = max(xs, default=0), max(ys, default=0)
        width = max_x * cfg.scale + 2 * cfg.margin
        height = max_y * cfg.scale + 2 * cfg.margin

        def at(x, y):
            # flip y so the drawing reads bottom-up like the coordinates
            return cfg.margin + float(x) * cfg.scale, cfg.margin + (max_y - float(y)) * cfg.scale

        d = draw.Drawing(width, height)
        d.append(draw.Rectangle(0, 0, width, height, fill="white"))

        for e, line in sorted(drawing.edges.items()):
            coords = [c for p in line for c in at(*p)]
            d.append(
                draw.Lines(
                    *coords,
                    close=False,
                    fill="none",
                    stroke=cfg.forbidden_color if e in forbidden else cfg.edge_color,
                    stroke_width=cfg.stroke_width,
                    class_="edge",
                    data_edge=str(e),
                )
            )

        for v, p in sorted(drawing.vertices.items()):
            x, y = at(*p)
            d.append(draw.Circle(x, y, cfg.vertex_radius, fill=cfg.vertex_color, class_="vertex", data_vertex=str(v)))

        for crossing in drawing.crossings:
            x, y = at(*crossing.point())
            d.append(
                draw.Circle(
                    x, y, cfg.crossing_radius,
                    fill="none",
                    stroke=cfg.crossing_color,
                    stroke_width=cfg.stroke_width,
                    class_="crossing",
                    data_edges=f"{crossing.edges[0]} {crossing.edges[1]}",
                )
            )
        return d

    def to_svg(self, drawing: Drawing, forbidden: Iterable[int] = ()) -> str:
        return self.render(drawing, forbidden).as_svg()


def emit_svg(drawing: Drawing, forbidden: Iterable[int] = ()) -> str:
    """SVG document text for a drawing"""
    return SvgExporter().to_svg(drawing, forbidden)
