"""Static SVG drawings of (periodic) Ptolemy diagrams."""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .geometry_a import DiagonalSet, GeometryError
from .geometry_d import ArcSetD, Diameter, GREEN

GREEN_HEX = "#2a9d2a"
RED_HEX = "#d0342c"
ARC_HEX = "#555555"


@dataclass
class RenderSpec:
    ngon: int
    highlighted: DiagonalSet | ArcSetD
    size: int = 400
    title: str = ""

    def __post_init__(self) -> None:
        expected = self.highlighted.ngon if isinstance(self.highlighted, DiagonalSet) else (
            2 * self.highlighted.u
        )
        if expected != self.ngon:
            raise GeometryError(f"set lives on a {expected}-gon, not a {self.ngon}-gon")


def _vertex(v: int, m: int, radius: float, c: float) -> tuple[float, float]:
    # vertex 1 at the top, labels increase clockwise
    angle = math.pi / 2 - 2 * math.pi * (v - 1) / m
    return c + radius * math.cos(angle), c - radius * math.sin(angle)


def render_svg(spec: RenderSpec) -> str:
    m, size = spec.ngon, spec.size
    c = size / 2
    r = size * 0.38
    pts = [_vertex(v, m, r, c) for v in range(1, m + 1)]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    if spec.title:
        out.append(f"<title>{escape(spec.title)}</title>")
    poly = " ".join(f"{x:.2f},{y:.2f}" for x, y in pts)
    out.append(f'<polygon points="{poly}" fill="none" stroke="black" stroke-width="1.5"/>')

    def line(a: int, b: int, color: str, dashed: bool = False) -> None:
        (x1, y1), (x2, y2) = pts[(a - 1) % m], pts[(b - 1) % m]
        dash = ' stroke-dasharray="6,4"' if dashed else ""
        out.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            f'stroke="{color}" stroke-width="2"{dash}/>'
        )

    if isinstance(spec.highlighted, DiagonalSet):
        for d in spec.highlighted:
            line(d.i, d.j, ARC_HEX)
    else:
        for a in spec.highlighted:
            if isinstance(a, Diameter):
                green = a.color == GREEN
                line(a.i, a.i + a.u, GREEN_HEX if green else RED_HEX, dashed=not green)
            else:
                for p, q in a.arcs:
                    line(p, q, ARC_HEX)

    for v in range(1, m + 1):
        x, y = pts[v - 1]
        lx, ly = _vertex(v, m, r + 16, c)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
        out.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="12" text-anchor="middle" '
            f'dominant-baseline="central">{v}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
