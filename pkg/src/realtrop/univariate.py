"""Univariate real tropical roots, multiplicities and Polya certificates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import KPoly, RealTropPoly, SignedTrop, residue_poly, tropicalize
from .puiseux import Puiseux
from .qpoly import count_roots, qmul, qpoly, render

__all__ = [
    "RootReport",
    "unsigned_roots",
    "sign_sequence",
    "real_multiplicity",
    "real_roots",
    "signed_roots",
    "viro_lift",
    "PolyaError",
    "polya_exponent",
    "certify_nonroot",
    "residue_to_qpoly",
]


@dataclass(frozen=True)
class RootReport:
    modulus: Fraction
    complex_mult: int
    real_mult_plus: int
    real_mult_minus: int

    def as_row(self) -> tuple:
        return (self.modulus, self.complex_mult, self.real_mult_plus, self.real_mult_minus)


def _require_univariate(f: RealTropPoly) -> None:
    if f.nvars != 1:
        raise ValueError(f"expected a univariate polynomial, got {f.nvars} variables")


def unsigned_roots(f: RealTropPoly) -> list[tuple[Fraction, int]]:
    """Breakpoints of ``p -> min_l |a_l| + l*p`` with multiplicities.

    Roots come in the order of the exponents they separate, i.e. by
    decreasing modulus.  The multiplicity is the exponent span of the
    minimizing monomials.
    """
    _require_univariate(f)
    if len(f) < 2:
        raise ValueError("a single monomial has no tropical roots")
    pts = [(exp[0], a.modulus) for exp, a in f.terms]
    # lower convex hull of (l, |a_l|), monotone chain
    hull: list[tuple[int, Fraction]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    out = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        out.append(((y1 - y2) / (x2 - x1), x2 - x1))
    return out


def sign_sequence(f: RealTropPoly, p: SignedTrop) -> list[int]:
    """Evaluated signs of the minimizing monomials, by increasing exponent."""
    _require_univariate(f)
    return [s for _, s in f.argmin((p,))]


def real_multiplicity(f: RealTropPoly, p: SignedTrop) -> int:
    """Number of sign changes of the sign sequence at ``p``."""
    seq = sign_sequence(f, p)
    if len(seq) < 2:
        raise ValueError(f"|p| = {p.modulus} is not a tropical root of the unsigned polynomial")
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def real_roots(f: RealTropPoly) -> list[RootReport]:
    return [
        RootReport(
            a, m, real_multiplicity(f, SignedTrop(1, a)), real_multiplicity(f, SignedTrop(-1, a))
        )
        for a, m in unsigned_roots(f)
    ]


def signed_roots(f: RealTropPoly) -> list[SignedTrop]:
    """Points of the real tropical hypersurface of a univariate ``f``."""
    out = []
    for r in real_roots(f):
        if r.real_mult_plus:
            out.append(SignedTrop(1, r.modulus))
        if r.real_mult_minus:
            out.append(SignedTrop(-1, r.modulus))
    return out


def viro_lift(signs: Mapping[int, int]) -> KPoly:
    """``sum_l s_l t^(l^2) x^l``, whose real roots realize the tropical sign pattern."""
    if not signs:
        raise ValueError("empty sign pattern")
    return KPoly({(l,): Puiseux.monomial(s, l * l) for l, s in signs.items()}, 1)


class PolyaError(ValueError):
    pass


def _positive_coefficients(g) -> bool:
    return all(c > 0 for c in g)


def polya_exponent(g, nmax: int = 64) -> tuple[int, tuple]:
    """Least ``N <= nmax`` such that ``g*(1+x)^N`` has only positive coefficients.

    ``g`` is a dense rational polynomial (coefficients by increasing degree)
    that must be positive on ``[0, oo)``; this is checked with Sturm sequences.
    """
    g = qpoly(g)
    if not g or g[0] <= 0 or count_roots(g, 0, None) > 0:
        raise PolyaError(f"{render(g)} is not positive on the closed positive axis")
    cur = g
    for n in range(nmax + 1):
        if _positive_coefficients(cur):
            return n, cur
        cur = qmul(cur, (Fraction(1), Fraction(1)))
    raise PolyaError(f"no Polya exponent N <= {nmax} for {render(g)}")


def residue_to_qpoly(res: Mapping[tuple[int, ...], Fraction]) -> tuple:
    """Dense form of a univariate residue polynomial, shifted to start at degree 0."""
    low = min(e for (e,) in res)
    dense = [Fraction(0)] * (max(e for (e,) in res) - low + 1)
    for (e,), c in res.items():
        dense[e - low] = c
    return qpoly(dense)


def certify_nonroot(F: KPoly, p: SignedTrop, nmax: int = 64) -> KPoly:
    """A multiple ``H = F*(1 + s(p) t^-|p| x)^N`` with ``p`` off the hypersurface of ``trop(H)``.

    Requires ``p`` to lie on the hypersurface of ``trop(F)`` while the residue
    polynomial of ``F`` at ``|p|`` has no real root of sign ``s(p)``.
    """
    if F.nvars != 1:
        raise ValueError("certify_nonroot expects a univariate polynomial")
    f = tropicalize(F)
    if not f.contains((p,)):
        raise ValueError(f"{p.label()} is not on the real tropical hypersurface of trop(F)")
    res = residue_to_qpoly(residue_poly(F, (p.modulus,)))
    # substitute x = s(p) y so that roots of sign s(p) become positive roots
    g = qpoly(c * (p.sign ** i) for i, c in enumerate(res))
    if g[0] < 0:
        g = tuple(-c for c in g)
    try:
        n, _ = polya_exponent(g, nmax)
    except PolyaError as err:
        raise ValueError(f"residue polynomial has a root of sign {p.sign:+d}: {err}") from None
    factor = KPoly({(0,): 1, (1,): Puiseux.monomial(p.sign, -p.modulus)}, 1)
    H = F * factor ** n
    if tropicalize(H).contains((p,)):
        raise RuntimeError(f"Polya multiple with N = {n} failed to remove {p.label()}")
    return H
