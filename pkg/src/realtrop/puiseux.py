"""Finite real Puiseux series with rational coefficients.

A :class:`Puiseux` value is a finite sum ``c_1 t^e_1 + ... + c_k t^e_k`` with
rational coefficients and rational exponents, kept in canonical form (strictly
increasing exponents, no zero coefficient).  All ring operations are exact.
Division is deliberately unsupported, except for inverting a single-term
series, which is again a finite sum.

>>> p = Puiseux.parse("3*t^(1/2) - t")
>>> p.valuation, p.principal, p.sign
(Fraction(1, 2), Fraction(3, 1), 1)
>>> str(p * p)
'9*t - 6*t^(3/2) + t^2'
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from math import lcm
from typing import Iterable, Union

__all__ = ["Puiseux", "PuiseuxParseError", "as_puiseux", "t"]

Number = Union[int, Fraction]


class PuiseuxParseError(ValueError):
    """Raised for malformed Puiseux literals; carries the column of the fault."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


def _canonical(pairs: Iterable[tuple[Fraction, Fraction]]) -> tuple[tuple[Fraction, Fraction], ...]:
    acc: dict[Fraction, Fraction] = {}
    for e, c in pairs:
        acc[e] = acc.get(e, Fraction(0)) + c
    return tuple((e, acc[e]) for e in sorted(acc) if acc[e] != 0)


@total_ordering
class Puiseux:
    """Immutable finite Puiseux series ``sum c * t**e``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[tuple[Number, Number]] = ()):
        pairs = ((Fraction(e), Fraction(c)) for e, c in terms)
        object.__setattr__(self, "_terms", _canonical(pairs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Puiseux values are immutable")

    # construction helpers

    @classmethod
    def const(cls, c: Number) -> "Puiseux":
        return cls([(0, c)])

    @classmethod
    def monomial(cls, c: Number, e: Number) -> "Puiseux":
        return cls([(e, c)])

    @classmethod
    def parse(cls, text: str) -> "Puiseux":
        return _parse(text)

    @property
    def terms(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """``(exponent, coefficient)`` pairs by increasing exponent."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == 0 for e, _ in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def denominator(self) -> int:
        """Common denominator of all exponents (1 for the zero series)."""
        return lcm(1, *(e.denominator for e, _ in self._terms))

    # valuation data

    def _require_nonzero(self, what: str) -> None:
        if not self._terms:
            raise ValueError(f"{what} of zero undefined")

    @property
    def valuation(self) -> Fraction:
        self._require_nonzero("valuation")
        return self._terms[0][0]

    @property
    def principal(self) -> Fraction:
        """Coefficient of the least exponent."""
        self._require_nonzero("principal coefficient")
        return self._terms[0][1]

    @property
    def sign(self) -> int:
        self._require_nonzero("sign")
        return 1 if self._terms[0][1] > 0 else -1

    def residue(self, w: Number) -> Fraction:
        """Coefficient of ``t**w`` (zero when absent)."""
        w = Fraction(w)
        for e, c in self._terms:
            if e == w:
                return c
        return Fraction(0)

    def cmp(self, other: "Puiseux | Number") -> int:
        """-1, 0 or 1 according to the order of the real closed field."""
        d = self - as_puiseux(other)
        return 0 if d.is_zero() else d.sign

    # ring operations

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Puiseux(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> "Puiseux":
        return Puiseux((e, -c) for e, c in self._terms)

    def __pos__(self) -> "Puiseux":
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Puiseux(
            (e1 + e2, c1 * c2) for e1, c1 in self._terms for e2, c2 in other._terms
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Puiseux":
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Puiseux.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Puiseux":
        """Inverse of a single-term series; anything else is not a finite sum."""
        if not self.is_monomial():
            raise ZeroDivisionError("only single-term series are invertible as finite sums")
        (e, c), = self._terms
        return Puiseux.monomial(1 / c, -e)

    def __truediv__(self, other):
        raise TypeError("division of Puiseux series is not supported; use inverse() on monomials")

    __rtruediv__ = __truediv__
    __floordiv__ = __truediv__

    def scale_exponents(self, k: Number) -> "Puiseux":
        """Substitute ``t -> t**k``."""
        k = Fraction(k)
        return Puiseux((e * k, c) for e, c in self._terms)

    def at(self, t0: Number) -> Fraction:
        """Exact value at a positive rational ``t0``; exponents must be integers."""
        t0 = Fraction(t0)
        if t0 <= 0:
            raise ValueError("evaluation point must be positive")
        total = Fraction(0)
        for e, c in self._terms:
            if e.denominator != 1:
                raise ValueError(f"exponent {e} is not an integer; substitute t -> t^k first")
            total += c * t0 ** int(e)
        return total

    # comparisons

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.cmp(other) < 0

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self._terms))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # text

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self._terms):
            neg = c < 0
            body = _render_term(abs(c), e)
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Puiseux('{self}')"


def _render_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _render_term(c: Fraction, e: Fraction) -> str:
    if e == 0:
        return _render_rat(c)
    coeff = "" if c == 1 else _render_rat(c) + "*"
    if e == 1:
        return coeff + "t"
    if e.denominator == 1 and e > 0:
        return f"{coeff}t^{e.numerator}"
    return f"{coeff}t^({_render_rat(e)})"


def _coerce(x) -> "Puiseux":
    if isinstance(x, Puiseux):
        return x
    if isinstance(x, (int, Fraction)):
        return Puiseux.const(x)
    return NotImplemented


def as_puiseux(x: "Puiseux | Number | str") -> Puiseux:
    if isinstance(x, str):
        return Puiseux.parse(x)
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a Puiseux series")
    return y


t = Puiseux.monomial(1, 1)

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<op>[-+*/^()])|(?P<t>t))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise PuiseuxParseError(f"unexpected character {text[col - 1]!r}", col)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens


def _parse(text: str) -> Puiseux:
    """Parse ``term (('+'|'-') term)*`` with ``term = rat ['*' 't' ['^' rat]]``.

    Bare ``t`` is accepted for ``1*t`` and exponents may be parenthesized.
    """
    toks = _tokenize(text)
    i = 0

    def peek(kind=None, val=None):
        if i >= len(toks):
            return False
        k, v, _ = toks[i]
        return (kind is None or k == kind) and (val is None or v == val)

    def col():
        return toks[i][2] if i < len(toks) else len(text) + 1

    def expect(kind, val=None):
        nonlocal i
        if not peek(kind, val):
            raise PuiseuxParseError(f"expected {val or kind}", col())
        i += 1
        return toks[i - 1][1]

    def rat(allow_sign: bool) -> Fraction:
        nonlocal i
        sign = 1
        if allow_sign and peek("op", "-"):
            i += 1
            sign = -1
        elif allow_sign and peek("op", "+"):
            i += 1
        num = int(expect("int"))
        den = 1
        if peek("op", "/"):
            i += 1
            den = int(expect("int"))
            if den == 0:
                raise PuiseuxParseError("zero denominator", toks[i - 1][2])
        return sign * Fraction(num, den)

    def exponent() -> Fraction:
        nonlocal i
        if peek("op", "("):
            i += 1
            e = rat(True)
            expect("op", ")")
            return e
        return rat(True)

    def term() -> tuple[Fraction, Fraction]:
        nonlocal i
        if peek("t"):
            c = Fraction(1)
        else:
            c = rat(False)
            if not peek("op", "*"):
                return Fraction(0), c
            i += 1
        expect("t")
        e = Fraction(1)
        if peek("op", "^"):
            i += 1
            e = exponent()
        return e, c

    if not toks:
        raise PuiseuxParseError("empty literal", 1)
    pairs = []
    sign = 1
    if peek("op", "-") or peek("op", "+"):
        sign = -1 if toks[i][1] == "-" else 1
        i += 1
    e, c = term()
    pairs.append((e, sign * c))
    while i < len(toks):
        if not (peek("op", "+") or peek("op", "-")):
            raise PuiseuxParseError("expected '+' or '-'", col())
        sign = -1 if toks[i][1] == "-" else 1
        i += 1
        e, c = term()
        pairs.append((e, sign * c))
    return Puiseux(pairs)
