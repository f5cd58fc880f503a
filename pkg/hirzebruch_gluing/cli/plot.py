"""
Cone and Wall Figures
=====================
SVG rendering of the divisorial cone {z > 0, w > z*e} in the (z, w) plane
with the wall W_0 drawn on the boundary ray d_z = {z = 0}.

Screen coordinates follow the affine map

    px = margin + z * scale
    py = size - margin - w * scale,   scale = (size - 2*margin) / extent

so the origin sits at the lower-left corner of the plotting area.

The figure is schematic along d_z: a vertex wall starts at the origin, and
any other wall starts WALL_OFFSET of the extent above it whatever det02 is.
"""
from __future__ import annotations

import svgwrite

from ..config import SVG_PRECISION, WALL_OFFSET, settings
from ..divisorial import BoundaryTag, WallBoundaryReport
from ..gluing import GluingParams

CONE_FILL = "#dbe7f3"
BOUNDARY_STROKE = "#1f3b57"
WALL_STROKE = "#c0392b"


class _ConeCanvas:
    def __init__(self, size: int, margin: int, extent: int):
        self.size = size
        self.margin = margin
        self.extent = extent
        self.scale = (size - 2 * margin) / extent

    def point(self, z: float, w: float) -> tuple[float, float]:
        return (
            round(self.margin + z * self.scale, SVG_PRECISION),
            round(self.size - self.margin - w * self.scale, SVG_PRECISION),
        )


def _cone_corners(e: int, extent: int) -> list[tuple[float, float]]:
    if e == 0:
        return [(0, 0), (0, extent), (extent, extent), (extent, 0)]
    return [(0, 0), (0, extent), (extent / e, extent)]


def render_cone_svg(
    g: GluingParams,
    report: WallBoundaryReport,
    size: int | None = None,
    margin: int | None = None,
    extent: int | None = None,
) -> str:
    canvas = _ConeCanvas(
        size or settings.svg_size,
        margin if margin is not None else settings.svg_margin,
        extent or settings.svg_extent,
    )
    e = g.surface.e
    top = canvas.extent

    dwg = svgwrite.Drawing(size=(canvas.size, canvas.size), viewBox=f"0 0 {canvas.size} {canvas.size}")
    dwg.add(dwg.rect(insert=(0, 0), size=(canvas.size, canvas.size), fill="white"))
    dwg.add(dwg.polygon(
        [canvas.point(z, w) for z, w in _cone_corners(e, top)],
        fill=CONE_FILL, id="cone",
    ))

    # axes
    dwg.add(dwg.line(canvas.point(0, 0), canvas.point(top, 0), stroke="black", stroke_width=1, id="axis-z"))
    dwg.add(dwg.line(canvas.point(0, 0), canvas.point(0, top), stroke="black", stroke_width=1, id="axis-w"))
    dwg.add(dwg.text("z", insert=canvas.point(top, -0.15), font_size=14))
    dwg.add(dwg.text("w", insert=canvas.point(-0.2, top), font_size=14))

    # boundary rays d_z (z = 0) and d_w (w = z*e)
    dwg.add(dwg.line(canvas.point(0, 0), canvas.point(0, top), stroke=BOUNDARY_STROKE, stroke_width=2, id="boundary-z"))
    end_w = (top, top * e) if e <= 1 else (top / e, top)
    dwg.add(dwg.line(canvas.point(0, 0), canvas.point(*end_w), stroke=BOUNDARY_STROKE, stroke_width=2, id="boundary-w"))

    if report.on_wall:
        low = 0 if report.position.tag is BoundaryTag.VERTEX else WALL_OFFSET * top
        dwg.add(dwg.line(canvas.point(0, low), canvas.point(0, top), stroke=WALL_STROKE, stroke_width=4, id="wall"))

    caption = f"e={e}, m={g.m}: {report.position.tag.value}, det01={report.position.det01}, det02={report.position.det02}"
    if report.point_charge_vanishes:
        caption += " (Z(O_x) = 0 for this pi)"
    dwg.add(dwg.text(caption, insert=(canvas.margin, canvas.margin / 2), font_size=12, id="caption"))
    return dwg.tostring()
