"""Four-quadrant SVG pictures of real tropical plane curves.

Each orthant gets its own quadrant; inside it, moduli grow away from the
center so that the four copies of the plane sit back to back like the usual
hand-drawn pictures.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from typing import Mapping

from .patchwork import ORTHANTS, PlaneCurve, vertex_label

__all__ = ["render_svg"]

GAP = 30.0
UNIT = 60.0


def _range(curves: Mapping) -> tuple[int, int]:
    coords = [x for c in curves.values() for v in c.vertices for x in v]
    if not coords:
        return -1, 1
    return floor(min(coords)) - 1, ceil(max(coords)) + 1


def _ray_end(v, d, lo, hi):
    # largest s with lo <= v + s*d <= hi coordinatewise
    s = None
    for x, dx in zip(v, d):
        if dx > 0:
            t = (hi - Fraction(x)) / dx
        elif dx < 0:
            t = (lo - Fraction(x)) / dx
        else:
            continue
        s = t if s is None else min(s, t)
    s = max(s or Fraction(0), Fraction(0))
    return tuple(Fraction(x) + s * dx for x, dx in zip(v, d))


def render_svg(curves: Mapping[tuple[int, int], PlaneCurve], title: str = "") -> str:
    """SVG document for the output of ``plane_curve_cells``."""
    lo, hi = _range(curves)
    half = GAP + (hi - lo) * UNIT + 20
    size = 2 * half

    def pos(m, orthant):
        x = orthant[0] * (GAP + float(Fraction(m[0]) - lo) * UNIT)
        y = orthant[1] * (GAP + float(Fraction(m[1]) - lo) * UNIT)
        return round(half + x, 2), round(half - y, 2)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:g}" height="{size:g}" '
        f'viewBox="0 0 {size:g} {size:g}" font-family="sans-serif" font-size="11">',
        f'<rect width="{size:g}" height="{size:g}" fill="white"/>',
    ]
    if title:
        out.append(f"<title>{title}</title>")
    out.append(
        f'<line x1="0" y1="{half:g}" x2="{size:g}" y2="{half:g}" stroke="black" stroke-width="0.5"/>'
    )
    out.append(
        f'<line x1="{half:g}" y1="0" x2="{half:g}" y2="{size:g}" stroke="black" stroke-width="0.5"/>'
    )
    for orthant in ORTHANTS:
        out.append(f'<g class="orthant" data-signs="{orthant[0]:+d}{orthant[1]:+d}">')
        for k in range(lo, hi + 1):
            x0, y0 = pos((k, lo), orthant)
            x1, y1 = pos((k, hi), orthant)
            out.append(
                f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#bbb" stroke-dasharray="3,3"/>'
            )
            x0, y0 = pos((lo, k), orthant)
            x1, y1 = pos((hi, k), orthant)
            out.append(
                f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#bbb" stroke-dasharray="3,3"/>'
            )
        curve = curves.get(orthant)
        if curve is not None:
            for a, b in curve.segments:
                (x0, y0), (x1, y1) = pos(a, orthant), pos(b, orthant)
                out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="black" stroke-width="2"/>')
            for v, d in curve.rays:
                (x0, y0), (x1, y1) = pos(v, orthant), pos(_ray_end(v, d, lo, hi), orthant)
                out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="black" stroke-width="2"/>')
            for v in curve.vertices:
                x, y = pos(v, orthant)
                label = vertex_label(v, orthant)
                out.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
                out.append(f'<text class="vertex" x="{x + 5}" y="{y - 5}">{label}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
