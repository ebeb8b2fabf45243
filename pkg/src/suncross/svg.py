"""SVG rendering of geometric and combinatorial drawings."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .drawing import CombinatorialDrawing
from .geometry import GeometricDrawing

_STYLE = (
    "text { font: 9px sans-serif; } "
    ".edge { stroke: #456; stroke-width: 0.6; fill: none; } "
    ".vertex { fill: #c33; } "
    ".dummy { fill: #fa0; }")


def _header(width: float, height: float) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.2f} {height:.2f}">',
        f"<style>{_STYLE}</style>",
    ]


def _geometric_svg(gd: GeometricDrawing, labels: bool) -> str:
    pts = [p for path in gd.polylines.values() for p in path]
    xs = [float(p[0]) for p in pts]
    ys = [float(p[1]) for p in pts]
    span_x = max(xs) - min(xs) or 1.0
    span_y = max(ys) - min(ys) or 1.0
    unit = 60.0
    pad = 30.0

    def sx(x) -> float:
        return pad + (float(x) - min(xs)) * unit

    def sy(y) -> float:
        return pad + (max(ys) - float(y)) * unit

    out = _header(2 * pad + span_x * unit, 2 * pad + span_y * unit)
    for e, path in sorted(gd.polylines.items()):
        coords = " ".join(f"{sx(p[0]):.2f},{sy(p[1]):.2f}" for p in path)
        out.append(f'<polyline class="edge" points="{coords}"/>')
    for v, (x, y) in sorted(gd.coords.items()):
        out.append(
            f'<circle class="vertex" cx="{sx(x):.2f}" cy="{sy(y):.2f}" '
            'r="1.8"/>')
        if labels:
            out.append(
                f'<text x="{sx(x) + 2.5:.2f}" y="{sy(y) - 2.5:.2f}">'
                f"{escape(str(v))}</text>")
    out.append("</svg>")
    return "\n".join(out)


def _schematic_svg(drawing: CombinatorialDrawing, labels: bool) -> str:
    """Planarization on a circle; positions are schematic, not a plane
    embedding."""
    planar, _ = drawing.planarization()
    verts = planar.vertices
    n = len(verts)
    radius = max(120.0, 14.0 * n / math.pi)
    size = 2 * (radius + 60.0)
    centre = size / 2

    pos = {}
    for i, v in enumerate(verts):
        a = 2 * math.pi * i / n
        pos[v] = (centre + radius * math.cos(a),
                  centre - radius * math.sin(a))

    out = _header(size, size)
    for a, b in planar.edges:
        (x1, y1), (x2, y2) = pos[a], pos[b]
        out.append(
            f'<line class="edge" x1="{x1:.2f}" y1="{y1:.2f}" '
            f'x2="{x2:.2f}" y2="{y2:.2f}"/>')
    for v in verts:
        x, y = pos[v]
        cls = "dummy" if str(v).startswith("#") else "vertex"
        out.append(f'<circle class="{cls}" cx="{x:.2f}" cy="{y:.2f}" r="3"/>')
        if labels:
            out.append(
                f'<text x="{x + 4:.2f}" y="{y - 4:.2f}">'
                f"{escape(str(v))}</text>")
    out.append("</svg>")
    return "\n".join(out)


def render_svg(drawing, labels: bool = True) -> str:
    """SVG text for a geometric drawing (faithful polylines) or a
    combinatorial drawing (schematic circular planarization layout)."""
    if isinstance(drawing, GeometricDrawing):
        return _geometric_svg(drawing, labels)
    if isinstance(drawing, CombinatorialDrawing):
        return _schematic_svg(drawing, labels)
    raise TypeError(f"cannot render {type(drawing).__name__} as SVG")


def export_svg(drawing, path: str, labels: bool = True) -> None:
    text = render_svg(drawing, labels)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
