"""Real tropical bases for the ideal of a finite point set in the torus.

Given ``V = {p_1, ..., p_r}`` in ``(K*)^n`` the construction produces

* the coordinate polynomials ``F_j`` (squarefree part of ``prod_i (x_j - p_ij)``),
* an integer functional ``b`` injective on the moduli of the candidate set ``S``,
* ``F_0``, the squarefree part of ``prod_i (x^b - p_i^b)`` with denominators cleared,
* one polynomial ``G_c`` per candidate ``c`` that survives the previous tests
  without being the tropicalization of a point of ``V``.

The union of these polynomials with any generating set of the ideal is a real
tropical basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .core import (
    KPoly,
    SignedTrop,
    format_point,
    squarefree_from_factors,
    trop_point,
    tropicalize,
)
from .puiseux import Puiseux, as_puiseux
from .univariate import signed_roots

__all__ = [
    "PointSetK",
    "BasisCertificate",
    "NotExcludableError",
    "coordinate_polys",
    "candidate_set",
    "functional_candidates",
    "is_injective",
    "choose_L",
    "build_F0",
    "build_Gc",
    "survivors",
    "build_basis",
    "verify_basis",
]

SignedPoint = tuple[SignedTrop, ...]


class NotExcludableError(ValueError):
    """A candidate shares modulus and every sign with a point of V."""


class PointSetK:
    """Pairwise distinct points of ``(K*)^n`` with finite Puiseux coordinates."""

    def __init__(self, points: Sequence[Sequence]):
        pts = [tuple(as_puiseux(c) for c in p) for p in points]
        if not pts:
            raise ValueError("empty point set")
        n = len(pts[0])
        if n == 0 or any(len(p) != n for p in pts):
            raise ValueError("points must share a positive dimension")
        for p in pts:
            if any(c.is_zero() for c in p):
                raise ValueError(f"point {tuple(map(str, p))} is not in the torus")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        self.n = n
        self.points: tuple[tuple[Puiseux, ...], ...] = tuple(pts)

    def trop(self) -> list[SignedPoint]:
        return sorted({trop_point(p) for p in self.points})

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @classmethod
    def parse(cls, text: str) -> "PointSetK":
        """One point per line, coordinates as comma-separated Puiseux literals."""
        pts = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                pts.append([Puiseux.parse(c) for c in line.split(",")])
            except ValueError as err:
                raise ValueError(f"line {lineno}: {err}") from None
        return cls(pts)

    def dump(self) -> str:
        return "".join(", ".join(map(str, p)) + "\n" for p in self.points)


@dataclass
class BasisCertificate:
    coord_polys: list[KPoly]
    functional: tuple[int, ...]
    f0: KPoly
    candidates: list[SignedPoint]
    trop_v: list[SignedPoint]
    survivors: list[SignedPoint]
    discards: dict[SignedPoint, KPoly] = field(default_factory=dict)

    def polynomials(self) -> list[KPoly]:
        return [*self.coord_polys, self.f0, *self.discards.values()]


def coordinate_polys(V: PointSetK) -> list[KPoly]:
    out = []
    for j in range(V.n):
        factors = [KPoly({(1,): 1, (0,): -p[j]}, 1) for p in V]
        out.append(squarefree_from_factors(factors))
    return out


def candidate_set(V: PointSetK, coord_polys: Sequence[KPoly] | None = None) -> list[SignedPoint]:
    """Cartesian product of the signed tropical roots of each ``trop(F_j)``."""
    polys = coord_polys if coord_polys is not None else coordinate_polys(V)
    roots = [sorted(signed_roots(tropicalize(F))) for F in polys]
    return sorted(itertools.product(*roots))


def functional_candidates(n: int) -> Iterator[tuple[int, ...]]:
    """``(1, k, k^2, ..., k^(n-1))`` for ``k = 0, 1, 2, ...``."""
    k = 0
    while True:
        yield tuple(k ** i if i else 1 for i in range(n))
        k += 1


def is_injective(b: Sequence[int], moduli) -> bool:
    vals = [sum(bi * m for bi, m in zip(b, mod)) for mod in moduli]
    return len(set(vals)) == len(vals)


def choose_L(S: Sequence[SignedPoint]) -> tuple[int, ...]:
    """First functional on the moment curve that is injective on ``|S|``."""
    if not S:
        raise ValueError("empty candidate set")
    moduli = sorted({tuple(c.modulus for c in s) for s in S})
    for b in functional_candidates(len(S[0])):
        if is_injective(b, moduli):
            return b
    raise AssertionError("unreachable")


def _power_factor(p: Sequence[Puiseux], b: Sequence[int]) -> KPoly:
    # x^b - p^b with negative exponents cleared: x^{b+} p^{b-} - p^{b+} x^{b-}
    n = len(p)
    pos = tuple(max(e, 0) for e in b)
    neg = tuple(max(-e, 0) for e in b)
    p_pos, p_neg = Puiseux.const(1), Puiseux.const(1)
    for c, e1, e2 in zip(p, pos, neg):
        p_pos = p_pos * c ** e1
        p_neg = p_neg * c ** e2
    if pos == neg:
        raise ValueError("the zero functional gives no factor")
    return KPoly({pos: p_neg, neg: -p_pos}, n)


def build_F0(V: PointSetK, b: Sequence[int]) -> KPoly:
    return squarefree_from_factors([_power_factor(p, b) for p in V])


def build_Gc(V: PointSetK, c: SignedPoint, b: Sequence[int]) -> KPoly:
    """Product of one sign-separating coordinate factor per point with the modulus of ``c``
    and one ``x^b - p^b`` factor per other point (squarefree part)."""
    factors = []
    cmod = tuple(x.modulus for x in c)
    for p in V:
        a = trop_point(p)
        if tuple(x.modulus for x in a) == cmod:
            h = next((j for j in range(V.n) if a[j].sign != c[j].sign), None)
            if h is None:
                raise NotExcludableError(f"{format_point(c)} is the tropicalization of a point of V")
            x_h = KPoly.var(h, V.n)
            factors.append(x_h - p[h])
        else:
            factors.append(_power_factor(p, b))
    return squarefree_from_factors(factors)


def survivors(polys: Sequence[KPoly], candidates: Sequence[SignedPoint]) -> list[SignedPoint]:
    tps = [tropicalize(F) for F in polys]
    return [c for c in candidates if all(f.contains(c) for f in tps)]


def _embed(F: KPoly, j: int, n: int) -> KPoly:
    return KPoly(
        {tuple(e[0] if i == j else 0 for i in range(n)): v for e, v in F.terms}, n
    )


def build_basis(V: PointSetK) -> BasisCertificate:
    univariate = coordinate_polys(V)
    coord = [_embed(F, j, V.n) for j, F in enumerate(univariate)]
    S = candidate_set(V, univariate)
    b = choose_L(S)
    F0 = build_F0(V, b)
    tv = V.trop()
    surv = survivors([*coord, F0], S)
    tv_set = set(tv)
    discards = {c: build_Gc(V, c, b) for c in surv if c not in tv_set}
    return BasisCertificate(coord, b, F0, S, tv, surv, discards)


def verify_basis(cert: BasisCertificate, V: PointSetK) -> bool:
    """Every certificate polynomial vanishes on ``V`` and exactly ``trop(V)`` survives in ``S``."""
    polys = cert.polynomials()
    for F in polys:
        for p in V:
            if not F.eval(p).is_zero():
                return False
    tv = set(V.trop())
    tps = [tropicalize(F) for F in polys]
    for c in cert.candidates:
        if all(f.contains(c) for f in tps) != (c in tv):
            return False
    return True
