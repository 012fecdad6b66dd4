"""Minimal-support (circuit) generators of affine linear ideals over K.

A :class:`LinearSystem` holds affine forms ``c_1 x_1 + ... + c_n x_n + c_0``
stored as rows ``(c_1, ..., c_n, c_0)``.  Its circuits are the nonzero forms
of the row space with inclusion-minimal support; their signed tropical
hypersurfaces cut out exactly the real tropicalization of the affine space.

All linear algebra is division free: ranks come from fraction-free
elimination and kernel vectors from Cramer-style minors, so coefficients stay
finite Puiseux sums.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import RealTropPoly, SignedTrop, trop
from .puiseux import Puiseux, as_puiseux

__all__ = [
    "LinearSystem",
    "CircuitForm",
    "DependentRowsError",
    "kdet",
    "krank",
    "kernel_vector",
    "circuits",
    "linear_member",
    "rejecting_circuit",
    "sample_solutions",
]

Matrix = Sequence[Sequence[Puiseux]]


class DependentRowsError(ValueError):
    def __init__(self, witness: Sequence[Puiseux]):
        super().__init__(
            "input rows are linearly dependent; combination coefficients: "
            + ", ".join(f"[{w}]" for w in witness)
        )
        self.witness = tuple(witness)


class LinearSystem:
    """Affine forms in ``n`` variables; each row is ``(c_1, ..., c_n, c_0)``."""

    def __init__(self, rows: Sequence[Sequence]):
        rs = [tuple(as_puiseux(c) for c in r) for r in rows]
        if not rs:
            raise ValueError("a linear system needs at least one row")
        width = len(rs[0])
        if width < 2 or any(len(r) != width for r in rs):
            raise ValueError("rows must have equal length n+1 with n >= 1")
        if any(all(c.is_zero() for c in r) for r in rs):
            raise ValueError("zero row")
        self.n = width - 1
        self.rows: tuple[tuple[Puiseux, ...], ...] = tuple(rs)

    @classmethod
    def parse(cls, text: str) -> "LinearSystem":
        """One row per line: comma-separated Puiseux literals ``c_1, ..., c_n, c_0``."""
        rows = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                rows.append([Puiseux.parse(c) for c in line.split(",")])
            except ValueError as err:
                raise ValueError(f"line {lineno}: {err}") from None
        return cls(rows)

    def dump(self) -> str:
        return "".join(", ".join(map(str, r)) + "\n" for r in self.rows)


def _names(n: int) -> list[str]:
    return list("xyz"[:n]) if n <= 3 else [f"x{i + 1}" for i in range(n)]


@dataclass(frozen=True)
class CircuitForm:
    coefficients: tuple[Puiseux, ...]

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coefficients) if not c.is_zero())

    def tropical(self) -> RealTropPoly:
        n = self.n
        terms = {}
        for i, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            exp = tuple(int(j == i) for j in range(n)) if i < n else (0,) * n
            terms[exp] = trop(c)
        return RealTropPoly(terms, n)

    def evaluate(self, point: Sequence) -> Puiseux:
        total = self.coefficients[-1]
        for c, x in zip(self.coefficients, point):
            total = total + c * as_puiseux(x)
        return total

    def __str__(self) -> str:
        names = _names(self.n) + [""]
        parts = []
        for c, name in zip(self.coefficients, names):
            if c.is_zero():
                continue
            if not name:
                parts.append(f"({c})" if len(c.terms) > 1 else str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            elif len(c.terms) == 1:
                parts.append(f"{c}*{name}")
            else:
                parts.append(f"({c})*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def dump(self) -> str:
        return ", ".join(map(str, self.coefficients))


def kdet(matrix: Matrix) -> Puiseux:
    """Determinant by Laplace expansion along rows, memoized on column subsets."""
    m = [[as_puiseux(x) for x in r] for r in matrix]
    k = len(m)
    if k == 0:
        return Puiseux.const(1)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> Puiseux:
        if row == k:
            return Puiseux.const(1)
        total = Puiseux()
        ordered = sorted(cols)
        for pos, col in enumerate(ordered):
            a = m[row][col]
            if a.is_zero():
                continue
            sub = minor(row + 1, cols - {col})
            total = total + (a * sub if pos % 2 == 0 else -(a * sub))
        return total

    return minor(0, frozenset(range(k)))


def _pivots(matrix: Matrix) -> tuple[list[int], list[int]]:
    """Original row and column indices of a maximal nonsingular minor."""
    rows = [list(r) for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    order = list(range(len(rows)))
    prow, pcol = [], []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        order[r], order[piv] = order[piv], order[r]
        lead = rows[r][col]
        for i in range(r + 1, len(rows)):
            a = rows[i][col]
            if not a.is_zero():
                rows[i] = [lead * x - a * y for x, y in zip(rows[i], rows[r])]
        prow.append(order[r])
        pcol.append(col)
        r += 1
        if r == len(rows):
            break
    return prow, pcol


def krank(matrix: Matrix) -> int:
    return len(_pivots(matrix)[0])


def kernel_vector(matrix: Matrix) -> list[Puiseux] | None:
    """A nonzero ``y`` with ``matrix @ y = 0``, or None when the columns are independent."""
    m = [[as_puiseux(x) for x in r] for r in matrix]
    k = len(m[0]) if m else 0
    prow, pcol = _pivots(m)
    free = [j for j in range(k) if j not in pcol]
    if not free:
        return None
    j = free[0]
    sub = [[m[r][c] for c in pcol] for r in prow]
    y = [Puiseux()] * k
    y[j] = kdet(sub)
    for i, c in enumerate(pcol):
        replaced = [row[:i] + [m[r][j]] + row[i + 1:] for row, r in zip(sub, prow)]
        y[c] = -kdet(replaced)
    return y


def _normalize(coeffs: Sequence[Puiseux]) -> tuple[Puiseux, ...]:
    nz = [c for c in coeffs if not c.is_zero()]
    vmin = min(c.valuation for c in nz)
    sign = nz[0].sign
    unit = Puiseux.monomial(sign, -vmin)
    return tuple(c * unit for c in coeffs)


def circuits(system: LinearSystem) -> list[CircuitForm]:
    """All minimal-support forms of the row space, normalized, by increasing support."""
    M = system.rows
    r = len(M)
    width = system.n + 1
    transpose = [[M[i][j] for i in range(r)] for j in range(width)]
    witness = kernel_vector(transpose)
    if witness is not None:
        raise DependentRowsError(witness)

    found: list[CircuitForm] = []
    for size in range(1, width + 1):
        for C in itertools.combinations(range(width), size):
            Cs = set(C)
            if any(f.support <= Cs for f in found):
                continue
            outside = [j for j in range(width) if j not in Cs]
            # y with sum_i y_i M[i][j] = 0 for every column j outside C
            if outside:
                y = kernel_vector([[M[i][j] for i in range(r)] for j in outside])
            else:
                y = [Puiseux.const(1)] + [Puiseux()] * (r - 1)
            if y is None:
                continue
            form = [Puiseux()] * width
            for yi, row in zip(y, M):
                if not yi.is_zero():
                    form = [f + yi * c for f, c in zip(form, row)]
            if all(c.is_zero() for c in form):
                continue
            found.append(CircuitForm(_normalize(form)))
    return found


def rejecting_circuit(forms: Sequence[CircuitForm], p: Sequence[SignedTrop]) -> CircuitForm | None:
    for form in forms:
        if not form.tropical().contains(p):
            return form
    return None


def linear_member(forms: Sequence[CircuitForm], p: Sequence[SignedTrop]) -> bool:
    """Whether ``p`` lies on every circuit hypersurface, i.e. in ``trop`` of the affine space."""
    return rejecting_circuit(forms, p) is None


def _random_puiseux(rng: random.Random) -> Puiseux:
    terms = []
    for _ in range(rng.randint(1, 2)):
        c = 0
        while c == 0:
            c = rng.randint(-5, 5)
        terms.append((rng.randint(-2, 2), c))
    p = Puiseux(terms)
    return p if not p.is_zero() else Puiseux.const(1)


def sample_solutions(
    system: LinearSystem, count: int, seed: int = 0, max_retries: int = 100
) -> list[tuple[Puiseux, ...]]:
    """Deterministic pseudo-random points of the affine space inside the torus.

    Pivot variables are solved by Cramer's rule; a pivot block whose
    determinant is a single-term series is required so that the solution is a
    finite sum.
    """
    n = system.n
    A = [list(r[:n]) for r in system.rows]
    b = [-r[n] for r in system.rows]
    rk = len(A)
    if krank(A) < rk:
        raise ValueError("the affine system has no solution")
    pivot_cols = None
    for cols in itertools.combinations(reversed(range(n)), rk):
        cols = sorted(cols)
        D = kdet([[row[c] for c in cols] for row in A])
        if not D.is_zero() and D.is_monomial():
            pivot_cols, Dinv = cols, D.inverse()
            break
    if pivot_cols is None:
        raise ValueError("no pivot block with a single-term determinant; solutions are not finite sums")
    free = [j for j in range(n) if j not in pivot_cols]
    rng = random.Random(seed)
    out: list[tuple[Puiseux, ...]] = []
    retries = 0
    while len(out) < count:
        u = {j: _random_puiseux(rng) for j in free}
        rhs = [bi - sum((row[j] * u[j] for j in free), Puiseux()) for bi, row in zip(b, A)]
        x = dict(u)
        block = [[row[c] for c in pivot_cols] for row in A]
        for i, c in enumerate(pivot_cols):
            replaced = [r[:i] + [v] + r[i + 1:] for r, v in zip(block, rhs)]
            x[c] = kdet(replaced) * Dinv
        point = tuple(x[j] for j in range(n))
        if any(c.is_zero() for c in point):
            retries += 1
            if retries > max_retries or not free:
                raise ValueError("could not sample a solution in the torus")
            continue
        out.append(point)
        if not free:
            break
    return out
