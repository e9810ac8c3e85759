"""Exact feasibility of rational linear inequality systems by Fourier-Motzkin elimination.

A constraint is a pair ``(a, b)`` meaning ``a . x >= b``.
"""

from fractions import Fraction
from math import ceil, floor, lcm


def _normalize(a, b):
    pivot = next((abs(c) for c in a if c), None)
    if pivot is None:
        return tuple(a), b
    return tuple(c / pivot for c in a), b / pivot


def _eliminate(system, k):
    pos, neg, rest = [], [], []
    for a, b in system:
        if a[k] > 0:
            pos.append((a, b))
        elif a[k] < 0:
            neg.append((a, b))
        else:
            rest.append((a, b))
    out = set(rest)
    for ap, bp in pos:
        for aq, bq in neg:
            s, t = -aq[k], ap[k]
            a = tuple(s * x + t * y for x, y in zip(ap, aq))
            out.add(_normalize(a, s * bp + t * bq))
    return sorted(out)


def _interval(system, k, values):
    """Bounds on x_k given x_0..x_{k-1} = values; variables beyond k are absent."""
    lo, hi = None, None
    for a, b in system:
        rhs = b - sum(a[i] * values[i] for i in range(k))
        if a[k] > 0:
            v = rhs / a[k]
            lo = v if lo is None else max(lo, v)
        elif a[k] < 0:
            v = rhs / a[k]
            hi = v if hi is None else min(hi, v)
        elif rhs > 0:
            return None
    if lo is not None and hi is not None and lo > hi:
        return None
    return lo, hi


def _pick(lo, hi):
    # integer nearest to zero if the interval holds one, else any rational point
    if (lo is None or lo <= 0) and (hi is None or hi >= 0):
        return Fraction(0)
    if lo is not None and lo > 0:
        c = Fraction(ceil(lo))
        return c if hi is None or c <= hi else lo
    c = Fraction(floor(hi))
    return c if lo is None or c >= lo else hi


def feasible_point(constraints, nvars):
    """Return a rational point satisfying every constraint, or None if infeasible.

    The choice is deterministic: variables are fixed in index order, each to the
    integer of smallest absolute value its projected interval allows.
    """
    system = sorted({_normalize(tuple(Fraction(c) for c in a), Fraction(b)) for a, b in constraints})
    for a, _ in system:
        if len(a) != nvars:
            raise ValueError("constraint length does not match variable count")
    stages = [system]
    for k in range(nvars - 1, -1, -1):
        stages.append(_eliminate(stages[-1], k))
    if any(b > 0 for _, b in stages[-1]):
        return None
    values = []
    for k in range(nvars):
        # stages[nvars - 1 - k] involves only x_0..x_k
        bounds = _interval(stages[nvars - 1 - k], k, values)
        if bounds is None:
            return None
        values.append(_pick(*bounds))
    return values


def integral_point(constraints, nvars):
    """Integer point for a system that is invariant under scaling by factors >= 1.

    Used for homogeneous systems of the form ``a . x >= 1`` (or ``>= 0``): a
    rational solution is scaled by the lcm of its denominators.
    """
    point = feasible_point(constraints, nvars)
    if point is None:
        return None
    scale = lcm(*(v.denominator for v in point)) if point else 1
    return [int(v * scale) for v in point]
