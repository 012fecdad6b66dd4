"""Signed tropical numbers, real tropical polynomials and polynomials over K.

``K`` is the field of real Puiseux series (finite sums here, see
:mod:`realtrop.puiseux`).  A real tropical number is a pair ``(sign, modulus)``;
a real tropical polynomial maps integer exponent vectors to real tropical
coefficients and defines the piecewise-linear function

    f(p) = min_l ( |a_l| + <|p|, l> )

A point ``p`` lies on the real tropical hypersurface of ``f`` when that
minimum is attained by two monomials whose evaluated signs differ.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .puiseux import Puiseux, as_puiseux

__all__ = [
    "SignedTrop",
    "plus",
    "minus",
    "trop",
    "trop_point",
    "parse_point",
    "format_point",
    "RealTropPoly",
    "KPoly",
    "tropicalize",
    "residue_poly",
    "normalize_factor",
    "proportional",
    "distinct_factors",
    "squarefree_from_factors",
]

Exponent = tuple[int, ...]


@dataclass(frozen=True, order=True)
class SignedTrop:
    """An element ``a^+ = (1, a)`` or ``a^- = (-1, a)`` of the signed tropical line."""

    sign: int
    modulus: Fraction

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        object.__setattr__(self, "modulus", Fraction(self.modulus))

    def __mul__(self, other: "SignedTrop") -> "SignedTrop":
        # tropical multiplication: multiply signs, add moduli
        if not isinstance(other, SignedTrop):
            return NotImplemented
        return SignedTrop(self.sign * other.sign, self.modulus + other.modulus)

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + _rat(self.modulus)

    def label(self) -> str:
        """Superscript-style label such as ``-1^+``."""
        return f"{_rat(self.modulus)}^{'+' if self.sign > 0 else '-'}"

    @classmethod
    def parse(cls, text: str) -> "SignedTrop":
        """Accepts ``+0``, ``--1/2`` (sign then modulus) or ``0^+``, ``-1^-``."""
        s = text.strip()
        m = re.fullmatch(r"(-?\d+(?:/\d+)?)\^?([+-])", s)
        if m:
            return cls(1 if m.group(2) == "+" else -1, Fraction(m.group(1)))
        m = re.fullmatch(r"([+-])\s*(-?\d+(?:/\d+)?)", s)
        if m:
            return cls(1 if m.group(1) == "+" else -1, Fraction(m.group(2)))
        raise ValueError(f"malformed signed tropical number {text!r}")


def _rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def plus(a) -> SignedTrop:
    return SignedTrop(1, Fraction(a))


def minus(a) -> SignedTrop:
    return SignedTrop(-1, Fraction(a))


def trop(x: "Puiseux | int | Fraction | str") -> SignedTrop:
    """Signed valuation ``(s(x), v(x))`` of a nonzero series."""
    x = as_puiseux(x)
    return SignedTrop(x.sign, x.valuation)


def trop_point(xs: Iterable) -> tuple[SignedTrop, ...]:
    return tuple(trop(x) for x in xs)


def parse_point(text: str) -> tuple[SignedTrop, ...]:
    """Space-separated signed entries, e.g. ``"+0 -1"``."""
    parts = text.split()
    if not parts:
        raise ValueError("empty point")
    return tuple(SignedTrop.parse(p) for p in parts)


def format_point(p: Sequence[SignedTrop]) -> str:
    return " ".join(str(c) for c in p)


def _as_exp(key) -> Exponent:
    if isinstance(key, int):
        return (key,)
    return tuple(int(k) for k in key)


def _evaluated_sign(sign: int, exp: Exponent, point: Sequence[SignedTrop]) -> int:
    for e, c in zip(exp, point):
        if c.sign < 0 and e % 2:
            sign = -sign
    return sign


class RealTropPoly:
    """A real tropical polynomial ``(+)_l a_l w^l`` with integer exponents."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, terms: Mapping, nvars: int | None = None):
        items = {_as_exp(k): v for k, v in dict(terms).items()}
        if not items:
            raise ValueError("a real tropical polynomial needs at least one monomial")
        dims = {len(k) for k in items}
        if len(dims) != 1:
            raise ValueError("exponent vectors of different lengths")
        n = dims.pop()
        if nvars is not None and nvars != n:
            raise ValueError(f"expected {nvars} variables, exponents have {n}")
        for k, v in items.items():
            if not isinstance(v, SignedTrop):
                raise TypeError(f"coefficient of {k} is not a SignedTrop")
        self.nvars = n
        self._terms = tuple(sorted(items.items()))

    @property
    def terms(self) -> tuple[tuple[Exponent, SignedTrop], ...]:
        return self._terms

    @property
    def support(self) -> tuple[Exponent, ...]:
        return tuple(k for k, _ in self._terms)

    def as_dict(self) -> dict[Exponent, SignedTrop]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealTropPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def _check(self, point: Sequence[SignedTrop]) -> None:
        if len(point) != self.nvars:
            raise ValueError(
                f"dimension mismatch: polynomial in {self.nvars} variables, point of length {len(point)}"
            )

    def _values(self, point) -> list[Fraction]:
        mods = [c.modulus for c in point]
        return [
            a.modulus + sum((e * m for e, m in zip(exp, mods)), Fraction(0))
            for exp, a in self._terms
        ]

    def evaluate(self, point: Sequence[SignedTrop]) -> Fraction:
        """The minimum ``min_l |a_l| + <|p|, l>``; depends only on ``|p|``."""
        self._check(point)
        return min(self._values(point))

    def argmin(self, point: Sequence[SignedTrop]) -> list[tuple[Exponent, int]]:
        """Minimizing exponents (lexicographic) paired with their evaluated signs."""
        self._check(point)
        vals = self._values(point)
        best = min(vals)
        return [
            (exp, _evaluated_sign(a.sign, exp, point))
            for (exp, a), v in zip(self._terms, vals)
            if v == best
        ]

    def contains(self, point: Sequence[SignedTrop]) -> bool:
        """Membership in the real tropical hypersurface."""
        signs = {s for _, s in self.argmin(point)}
        return len(signs) == 2

    __contains__ = contains

    def twist(self, signs: Sequence[int]) -> "RealTropPoly":
        """Multiply each coefficient sign by ``prod signs[l]**exp[l]``."""
        pt = [SignedTrop(s, 0) for s in signs]
        return RealTropPoly(
            {exp: SignedTrop(_evaluated_sign(a.sign, exp, pt), a.modulus) for exp, a in self._terms}
        )

    def dump(self) -> str:
        return "".join(
            f"{'+' if a.sign > 0 else '-'}{_rat(a.modulus)} : {' '.join(map(str, exp))}\n"
            for exp, a in self._terms
        )

    @classmethod
    def parse(cls, text: str) -> "RealTropPoly":
        """One monomial per line: ``(+|-) modulus : e1 ... en``; ``#`` starts a comment."""
        terms: dict[Exponent, SignedTrop] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                coef, exps = line.split(":")
                exp = tuple(int(e) for e in exps.split())
                a = SignedTrop.parse(coef.replace(" ", ""))
            except ValueError as err:
                raise ValueError(f"line {lineno}: cannot parse {raw.strip()!r}: {err}") from None
            if exp in terms:
                raise ValueError(f"line {lineno}: duplicate exponent {exp}")
            terms[exp] = a
        return cls(terms)

    def __str__(self) -> str:
        names = _var_names(self.nvars, "vw" if self.nvars == 2 else None)
        return " ⊕ ".join(
            a.label() + _monomial(exp, names) for exp, a in self._terms
        )

    def __repr__(self) -> str:
        return f"RealTropPoly({str(self)!r})"


def _var_names(n: int, preferred: str | None = None) -> list[str]:
    if preferred and len(preferred) == n:
        return list(preferred)
    if n <= 3:
        return list("xyz"[:n])
    return [f"x{i + 1}" for i in range(n)]


def _monomial(exp: Exponent, names: Sequence[str], sep: str = "") -> str:
    parts = []
    for e, name in zip(exp, names):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return sep.join(parts)


Coefficient = Union[Puiseux, int, Fraction, str]


class KPoly:
    """A Laurent polynomial with finite Puiseux series coefficients."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, terms: Mapping, nvars: int | None = None):
        items: dict[Exponent, Puiseux] = {}
        for k, v in dict(terms).items():
            exp = _as_exp(k)
            c = as_puiseux(v)
            if not c.is_zero():
                items[exp] = items.get(exp, Puiseux()) + c
        items = {k: v for k, v in items.items() if not v.is_zero()}
        dims = {len(k) for k in items}
        if len(dims) > 1:
            raise ValueError("exponent vectors of different lengths")
        if dims:
            n = dims.pop()
            if nvars is not None and nvars != n:
                raise ValueError(f"expected {nvars} variables, exponents have {n}")
        elif nvars is None:
            raise ValueError("the zero polynomial needs an explicit number of variables")
        else:
            n = nvars
        self.nvars = n
        self._terms = tuple(sorted(items.items()))

    @classmethod
    def var(cls, i: int, nvars: int) -> "KPoly":
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls({exp: 1})

    @classmethod
    def const(cls, c: Coefficient, nvars: int) -> "KPoly":
        return cls({(0,) * nvars: c}, nvars)

    @property
    def terms(self) -> tuple[tuple[Exponent, Puiseux], ...]:
        return self._terms

    def as_dict(self) -> dict[Exponent, Puiseux]:
        return dict(self._terms)

    @property
    def support(self) -> tuple[Exponent, ...]:
        return tuple(k for k, _ in self._terms)

    def coefficient(self, exp) -> Puiseux:
        return self.as_dict().get(_as_exp(exp), Puiseux())

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, self._terms))

    def _coerce(self, other) -> "KPoly":
        if isinstance(other, KPoly):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"dimension mismatch: {self.nvars} vs {other.nvars} variables"
                )
            return other
        if isinstance(other, (int, Fraction, Puiseux)):
            return KPoly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = self.as_dict()
        for k, v in other._terms:
            acc[k] = acc.get(k, Puiseux()) + v
        return KPoly(acc, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> "KPoly":
        return KPoly({k: -v for k, v in self._terms}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exponent, Puiseux] = {}
        for k1, v1 in self._terms:
            for k2, v2 in other._terms:
                k = tuple(a + b for a, b in zip(k1, k2))
                acc[k] = acc.get(k, Puiseux()) + v1 * v2
        return KPoly(acc, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "KPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = KPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, *point) -> Puiseux:
        return self.eval(point)

    def eval(self, point: Sequence) -> Puiseux:
        """Exact value at a point of K^n (negative exponents need monomial coordinates)."""
        if len(point) != self.nvars:
            raise ValueError(
                f"dimension mismatch: polynomial in {self.nvars} variables, point of length {len(point)}"
            )
        xs = [as_puiseux(x) for x in point]
        total = Puiseux()
        for exp, c in self._terms:
            term = c
            for x, e in zip(xs, exp):
                if e:
                    term = term * x ** e
            total = total + term
        return total

    def euler(self, b0: int, b: Sequence[int]) -> "KPoly":
        """``b0*F + sum_i b_i x_i dF/dx_i``: each monomial scaled by ``b0 + <b, l>``."""
        if len(b) != self.nvars:
            raise ValueError("functional length does not match the number of variables")
        return KPoly(
            {exp: c * (b0 + sum(bi * e for bi, e in zip(b, exp))) for exp, c in self._terms},
            self.nvars,
        )

    def shift(self, exp: Sequence[int]) -> "KPoly":
        """Multiply by the monomial ``x**exp``."""
        return KPoly(
            {tuple(a + b for a, b in zip(k, exp)): v for k, v in self._terms}, self.nvars
        )

    def scale(self, c: Coefficient) -> "KPoly":
        c = as_puiseux(c)
        return KPoly({k: v * c for k, v in self._terms}, self.nvars)

    def dump(self) -> str:
        return "".join(f"{' '.join(map(str, exp))} : {c}\n" for exp, c in self._terms)

    @classmethod
    def parse(cls, text: str, nvars: int | None = None) -> "KPoly":
        """One monomial per line: ``e1 ... en : <Puiseux literal>``."""
        terms: dict[Exponent, Puiseux] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                exps, lit = line.split(":", 1)
                exp = tuple(int(e) for e in exps.split())
                c = Puiseux.parse(lit)
            except ValueError as err:
                raise ValueError(f"line {lineno}: cannot parse {raw.strip()!r}: {err}") from None
            terms[exp] = terms.get(exp, Puiseux()) + c
        if not terms and nvars is None:
            raise ValueError("empty polynomial file")
        return cls(terms, nvars)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = _var_names(self.nvars)
        parts = []
        for exp, c in sorted(self._terms, key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0]))):
            mon = _monomial(exp, names, "*")
            if not mon:
                parts.append(f"({c})" if len(c.terms) > 1 else str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            elif len(c.terms) == 1:
                parts.append(f"{c}*{mon}")
            else:
                parts.append(f"({c})*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"KPoly({str(self)!r})"


def tropicalize(F: KPoly) -> RealTropPoly:
    """Per-monomial signed valuation of the coefficients."""
    if F.is_zero():
        raise ValueError("cannot tropicalize the zero polynomial")
    return RealTropPoly({exp: trop(c) for exp, c in F.terms}, F.nvars)


def residue_poly(F: KPoly, w: Sequence) -> dict[Exponent, Fraction]:
    """Principal coefficients of the monomials of ``F`` minimizing ``v(a_l) + <w, l>``."""
    if F.is_zero():
        raise ValueError("residue polynomial of the zero polynomial")
    w = [Fraction(x) for x in w]
    if len(w) != F.nvars:
        raise ValueError("weight vector has the wrong length")
    vals = {exp: c.valuation + sum((e * x for e, x in zip(exp, w)), Fraction(0)) for exp, c in F.terms}
    best = min(vals.values())
    return {exp: c.principal for exp, c in F.terms if vals[exp] == best}


def _lead(F: KPoly) -> tuple[Exponent, Puiseux]:
    return max(F.terms, key=lambda kv: kv[0])


def normalize_factor(F: KPoly) -> KPoly:
    """Scale by the monomial unit giving the lex-leading coefficient valuation 0 and principal coefficient 1."""
    if F.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    _, c = _lead(F)
    return F.scale(Puiseux.monomial(1 / c.principal, -c.valuation))


def proportional(F: KPoly, G: KPoly) -> bool:
    """Whether ``F`` and ``G`` differ by a nonzero constant of K (checked without division)."""
    if F.nvars != G.nvars or F.support != G.support:
        return False
    _, f = _lead(F)
    _, g = _lead(G)
    return F.scale(g) == G.scale(f)


def distinct_factors(factors: Iterable[KPoly]) -> list[KPoly]:
    """Normalized representatives of the proportionality classes, in first-seen order."""
    reps: list[KPoly] = []
    for F in factors:
        if F.is_zero():
            raise ValueError("zero factor")
        N = normalize_factor(F)
        if not any(proportional(N, R) for R in reps):
            reps.append(N)
    return reps


def squarefree_from_factors(factors: Sequence[KPoly]) -> KPoly:
    """Product of one normalized representative per proportionality class."""
    reps = distinct_factors(factors)
    if not reps:
        raise ValueError("no factors given")
    out = reps[0]
    for R in reps[1:]:
        out = out * R
    return out
