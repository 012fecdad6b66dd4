"""Small exact linear algebra over Q (Fraction Gaussian elimination)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][col]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                k = m[i][col]
                m[i] = [a - k * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1])


def affine_dim(points: Sequence[Sequence]) -> int:
    """Dimension of the affine span (-1 for no points)."""
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    return rank([[a - b for a, b in zip(p, base)] for p in pts[1:]]) if len(pts) > 1 else 0


def in_affine_span(q: Sequence, points: Sequence[Sequence]) -> bool:
    pts = list(points)
    if not pts:
        return False
    return affine_dim(pts + [q]) == affine_dim(pts)


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """Unique solution of a square system, or None if singular."""
    n = len(matrix)
    aug = [list(r) + [b] for r, b in zip(matrix, rhs)]
    red, piv = row_echelon(aug)
    if piv != list(range(n)):
        return None
    return [red[i][n] for i in range(n)]


def det(matrix: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in matrix]
    n = len(m)
    sign = 1
    out = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        out *= m[col][col]
        for i in range(col + 1, n):
            k = m[i][col] / m[col][col]
            if k:
                m[i] = [a - k * b for a, b in zip(m[i], m[col])]
    return sign * out


def coordinate_chart(points: Sequence[Sequence]) -> list[int]:
    """Coordinate indices onto which projection is injective on the affine span."""
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    if not diffs:
        return []
    return row_echelon(diffs)[1]
