"""Dense univariate polynomials over Q and exact Sturm root counting.

Polynomials are tuples of :class:`~fractions.Fraction` coefficients in
increasing degree, with no trailing zeros (the zero polynomial is ``()``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

QPoly = tuple

__all__ = [
    "qpoly",
    "qadd",
    "qmul",
    "qpow",
    "qeval",
    "qderiv",
    "qdivmod",
    "qgcd",
    "squarefree_part",
    "sturm_sequence",
    "count_roots",
    "count_positive_roots",
    "count_negative_roots",
    "render",
]


def qpoly(coeffs: Iterable) -> QPoly:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def qadd(a: QPoly, b: QPoly) -> QPoly:
    n = max(len(a), len(b))
    return qpoly(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def qmul(a: QPoly, b: QPoly) -> QPoly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return qpoly(out)


def qpow(a: QPoly, k: int) -> QPoly:
    out: QPoly = (Fraction(1),)
    for _ in range(k):
        out = qmul(out, a)
    return out


def qeval(a: QPoly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def qderiv(a: QPoly) -> QPoly:
    return qpoly(i * a[i] for i in range(1, len(a)))


def qdivmod(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(r) >= len(b) and r:
        k = r[-1] / lead
        shift = len(r) - len(b)
        q[shift] = k
        for i, c in enumerate(b):
            r[shift + i] -= k * c
        r = list(qpoly(r))
    return qpoly(q), qpoly(r)


def qgcd(a: QPoly, b: QPoly) -> QPoly:
    while b:
        a, b = b, qdivmod(a, b)[1]
    if not a:
        return ()
    return tuple(c / a[-1] for c in a)


def squarefree_part(a: QPoly) -> QPoly:
    if len(a) <= 1:
        return a
    g = qgcd(a, qderiv(a))
    return qdivmod(a, g)[0]


def sturm_sequence(a: QPoly) -> list[QPoly]:
    seq = [a, qderiv(a)]
    while seq[-1]:
        r = qdivmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(tuple(-c for c in r))
    return [p for p in seq if p]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_at_infinity(p: QPoly, positive: bool) -> int:
    s = _sign(p[-1])
    if not positive and (len(p) - 1) % 2:
        s = -s
    return s


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for u, v in zip(nz, nz[1:]) if u != v)


def _variations_at(seq: list[QPoly], x: Optional[Fraction], positive: bool) -> int:
    if x is None:
        return _variations([_sign_at_infinity(p, positive) for p in seq])
    return _variations([_sign(qeval(p, x)) for p in seq])


def count_roots(a: QPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots in the half-open interval ``(lo, hi]``.

    ``None`` stands for -infinity (``lo``) or +infinity (``hi``).
    """
    a = qpoly(a)
    if not a:
        raise ValueError("the zero polynomial has infinitely many roots")
    if len(a) == 1:
        return 0
    seq = sturm_sequence(a)
    lo = None if lo is None else Fraction(lo)
    hi = None if hi is None else Fraction(hi)
    return _variations_at(seq, lo, positive=False) - _variations_at(seq, hi, positive=True)


def count_positive_roots(a: QPoly) -> int:
    a = qpoly(a)
    n = count_roots(a, 0, None)
    return n


def count_negative_roots(a: QPoly) -> int:
    a = qpoly(a)
    n = count_roots(a, None, 0)
    return n - (1 if a and a[0] == 0 else 0)


def render(a: QPoly, var: str = "x") -> str:
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mon = var if i == 1 else f"{var}^{i}"
            body = mon if mag == 1 else f"{mag}*{mon}"
        sep = "-" if c < 0 else "+"
        parts.append((sep, body))
    head_sep, head = parts[0]
    out = ("-" if head_sep == "-" else "") + head
    for sep, body in parts[1:]:
        out += f" {sep} {body}"
    return out
