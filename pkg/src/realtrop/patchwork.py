"""Dual regular subdivisions, the patchworking certificate and plane curve cells.

The subdivision dual to a real tropical polynomial is read off the lower hull
of the lifted support ``{(l, |a_l|)}``.  Facets are found by brute force: every
affinely independent ``(d+1)``-subset spans a candidate hyperplane, kept when
no lifted point lies strictly below it.  This is exact and quite adequate for
supports of a few dozen monomials.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from ._linalg import affine_dim, coordinate_chart, solve
from .core import RealTropPoly, SignedTrop

__all__ = [
    "Subdivision",
    "dual_subdivision",
    "is_patchwork_certified",
    "Certification",
    "CertifiedMembership",
    "certified_member",
    "PlaneCurve",
    "plane_curve_cells",
    "ORTHANTS",
    "convex_hull_2d",
    "polygon_area2",
]

Exponent = tuple[int, ...]
ORTHANTS = ((1, 1), (-1, 1), (-1, -1), (1, -1))


@dataclass(frozen=True)
class Subdivision:
    """Maximal cells of the regular subdivision induced by ``l -> |a_l|``.

    ``cells[k]`` lists the support points of a maximal cell and
    ``duals[k]`` the point of ``R^n`` where exactly those monomials tie for
    the minimum (defined when the support is full dimensional).
    """

    support: tuple[Exponent, ...]
    lifting: dict
    dim: int
    cells: tuple[tuple[Exponent, ...], ...]
    duals: tuple[tuple[Fraction, ...] | None, ...]

    def is_triangulation(self) -> bool:
        return all(len(c) == self.dim + 1 for c in self.cells)

    def vertices_used(self) -> set[Exponent]:
        return {p for c in self.cells for p in c}


def dual_subdivision(f: RealTropPoly) -> Subdivision:
    support = f.support
    lifting = {exp: a.modulus for exp, a in f.terms}
    d = affine_dim(support)
    if d < 1:
        raise ValueError("degenerate support: all exponents coincide")
    chart = coordinate_chart(support)
    proj = {p: tuple(Fraction(p[i]) for i in chart) for p in support}

    cells: dict[frozenset, tuple] = {}
    for subset in itertools.combinations(support, d + 1):
        # height function h(l) = c0 + <c, l'> through the chosen lifted points
        rows = [[Fraction(1), *proj[p]] for p in subset]
        coef = solve(rows, [lifting[p] for p in subset])
        if coef is None:
            continue
        c0, c = coef[0], coef[1:]
        gaps = {
            p: lifting[p] - c0 - sum((ci * xi for ci, xi in zip(c, proj[p])), Fraction(0))
            for p in support
        }
        if any(g < 0 for g in gaps.values()):
            continue
        cell = frozenset(p for p, g in gaps.items() if g == 0)
        if cell not in cells:
            cells[cell] = (c0, c)

    ordered = sorted(cells.items(), key=lambda kv: sorted(kv[0]))
    duals = []
    for _, (_, c) in ordered:
        if d == f.nvars:
            # the tie locus of monomials in the cell is p = -grad(h)
            dual = [Fraction(0)] * f.nvars
            for i, ci in zip(chart, c):
                dual[i] = -ci
            duals.append(tuple(dual))
        else:
            duals.append(None)
    return Subdivision(
        support=support,
        lifting=lifting,
        dim=d,
        cells=tuple(tuple(sorted(cell)) for cell, _ in ordered),
        duals=tuple(duals),
    )


def is_patchwork_certified(f: RealTropPoly) -> bool:
    """Whether the dual subdivision is a triangulation using every monomial as a vertex."""
    try:
        sub = dual_subdivision(f)
    except ValueError:
        return False
    return sub.is_triangulation() and sub.vertices_used() == set(f.support)


class Certification(enum.Enum):
    IN_TROP_V = "in"
    NOT_IN_TROP_V = "out"
    UNCERTIFIED = "uncertified"


@dataclass(frozen=True)
class CertifiedMembership:
    status: Certification
    member: bool


def certified_member(f: RealTropPoly, p: Sequence[SignedTrop]) -> CertifiedMembership:
    """Hypersurface membership, promoted to a statement about ``trop(V(F))`` when certified."""
    for c in p:
        if not isinstance(c.modulus, Fraction):
            raise TypeError("certified membership needs rational coordinates")
    member = f.contains(p)
    if not is_patchwork_certified(f):
        return CertifiedMembership(Certification.UNCERTIFIED, member)
    status = Certification.IN_TROP_V if member else Certification.NOT_IN_TROP_V
    return CertifiedMembership(status, member)


def convex_hull_2d(points: Sequence[Sequence]) -> list[tuple]:
    """Counter-clockwise hull vertices (collinear points dropped)."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polygon_area2(points: Sequence[Sequence]) -> Fraction:
    """Twice the area of the convex hull (the normalized area in the plane)."""
    hull = convex_hull_2d(points)
    if len(hull) < 3:
        return Fraction(0)
    s = Fraction(0)
    for (x1, y1), (x2, y2) in zip(hull, hull[1:] + hull[:1]):
        s += Fraction(x1) * y2 - Fraction(x2) * y1
    return abs(s)


@dataclass
class PlaneCurve:
    """Pieces of a real tropical plane curve inside one orthant.

    Vertices carry their exact coordinates; segments join two vertices; rays
    start at a vertex and follow a primitive integer direction.
    """

    orthant: tuple[int, int]
    vertices: list[tuple[Fraction, Fraction]]
    segments: list[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]
    rays: list[tuple[tuple[Fraction, Fraction], tuple[int, int]]]

    def labels(self) -> list[str]:
        return [vertex_label(v, self.orthant) for v in self.vertices]

    def is_empty(self) -> bool:
        return not (self.vertices or self.segments or self.rays)


def vertex_label(v, orthant) -> str:
    parts = []
    for x, s in zip(v, orthant):
        x = Fraction(x)
        r = str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        parts.append(f"{r}^{'+' if s > 0 else '-'}")
    return f"({parts[0]},{parts[1]})"


def _primitive(v) -> tuple[int, int]:
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = gcd(*ints) or 1
    return tuple(i // g for i in ints)


def _on_segment(q, a, b) -> bool:
    cross = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0])
    if cross != 0:
        return False
    return min(a[0], b[0]) <= q[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= q[1] <= max(a[1], b[1])


def plane_curve_cells(f: RealTropPoly) -> dict[tuple[int, int], PlaneCurve]:
    """Vertices, bounded edges and rays of the real tropical curve, orthant by orthant.

    A piece of the unsigned tropical curve belongs to the real curve in an
    orthant when the monomials tying along it show both evaluated signs there.
    """
    if f.nvars != 2:
        raise ValueError("plane curves need a bivariate polynomial")
    if len(f) == 1:
        return {o: PlaneCurve(o, [], [], []) for o in ORTHANTS}
    sub = dual_subdivision(f)
    if sub.dim != 2:
        raise ValueError("support must span the plane")

    # edges of cells: endpoints -> (points on edge, owning cells)
    edges: dict[frozenset, dict] = {}
    for k, cell in enumerate(sub.cells):
        hull = convex_hull_2d(cell)
        for a, b in zip(hull, hull[1:] + hull[:1]):
            key = frozenset((a, b))
            entry = edges.setdefault(
                key, {"points": tuple(q for q in cell if _on_segment(q, a, b)), "cells": []}
            )
            entry["cells"].append(k)

    out = {}
    for orthant in ORTHANTS:
        g = f.twist(orthant)
        sign = g.as_dict()

        def mixed(points):
            return len({sign[q].sign for q in points}) == 2

        vertices = [sub.duals[k] for k, cell in enumerate(sub.cells) if mixed(cell)]
        segments, rays = [], []
        for key, entry in sorted(edges.items(), key=lambda kv: sorted(kv[0])):
            if not mixed(entry["points"]):
                continue
            cells = entry["cells"]
            if len(cells) == 2:
                segments.append(tuple(sorted((sub.duals[cells[0]], sub.duals[cells[1]]))))
            else:
                a, b = sorted(key)
                k = cells[0]
                inside = next(q for q in sub.cells[k] if q not in entry["points"])
                d = (a[1] - b[1], b[0] - a[0])
                if (inside[0] - a[0]) * d[0] + (inside[1] - a[1]) * d[1] < 0:
                    d = (-d[0], -d[1])
                rays.append((sub.duals[k], _primitive(d)))
        out[orthant] = PlaneCurve(orthant, sorted(vertices), sorted(segments), sorted(rays))
    return out
