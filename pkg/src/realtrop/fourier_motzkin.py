"""Exact feasibility of small systems of linear inequalities over Q.

Constraints are pairs ``(a, b)`` meaning ``a . x >= b``.  Variables are
eliminated one at a time; a witness is rebuilt by back substitution through
the stored intermediate systems.  The blow-up is quadratic per step, which is
harmless for the four or five variables used here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["Constraint", "feasible_point", "ge", "eq"]

Constraint = tuple[tuple[Fraction, ...], Fraction]


def ge(a: Sequence, b=0) -> list[Constraint]:
    return [(tuple(Fraction(x) for x in a), Fraction(b))]


def eq(a: Sequence, b=0) -> list[Constraint]:
    return ge(a, b) + ge([-x for x in a], -Fraction(b))


def _canon(c: Constraint) -> Constraint:
    # scale so the largest |coefficient| is 1; keeps duplicates detectable
    a, b = c
    m = max((abs(x) for x in a), default=Fraction(0))
    if m == 0:
        return a, b
    return tuple(x / m for x in a), b / m


def _eliminate(cons: list[Constraint], k: int) -> list[Constraint]:
    lower, upper, rest = [], [], []
    for a, b in cons:
        if a[k] > 0:
            lower.append((a, b))
        elif a[k] < 0:
            upper.append((a, b))
        else:
            rest.append((a, b))
    out = set(rest)
    for al, bl in lower:
        for au, bu in upper:
            # combine so that x_k cancels: (-au_k)*lower + al_k*upper
            s, t = -au[k], al[k]
            a = tuple(s * x + t * y for x, y in zip(al, au))
            out.add(_canon((a, s * bl + t * bu)))
    return sorted(out)


def feasible_point(cons: Sequence[Constraint], nvars: int) -> list[Fraction] | None:
    """A point satisfying every constraint, or None when the system is infeasible."""
    stages = [sorted({_canon(c) for c in cons})]
    for k in reversed(range(nvars)):
        stages.append(_eliminate(stages[-1], k))
    if any(b > 0 for _, b in stages[-1]):
        return None
    x = [Fraction(0)] * nvars
    for k in range(nvars):
        # stage nvars-k still contains x_k but no x_j with j > k
        lo, hi = None, None
        for a, b in stages[nvars - k - 1]:
            if a[k] == 0 or any(a[j] for j in range(k + 1, nvars)):
                continue
            bound = (b - sum((a[j] * x[j] for j in range(k)), Fraction(0))) / a[k]
            if a[k] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None:
            x[k] = lo
        elif hi is not None:
            x[k] = hi
        if lo is not None and hi is not None and lo > hi:
            raise AssertionError("Fourier-Motzkin back substitution is inconsistent")
    return x
