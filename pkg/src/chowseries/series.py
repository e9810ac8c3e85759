"""Functions on a lattice monoid under convolution, and their truncated expansions.

Elements of Z^r are plain integer tuples.  A series is stored as a dict from
exponent tuples to nonzero integers.  Infinite series are handled by
truncation along a positive linear weight: a ``TruncatedSeries`` is exact at
every exponent of weight <= its bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fourier_motzkin import integral_point


class SeriesError(ValueError):
    pass


class DimensionMismatch(SeriesError):
    pass


class WeightMismatch(SeriesError):
    pass


class NoPositiveFunctional(SeriesError):
    pass


def _vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _clean(support):
    return {k: v for k, v in support.items() if v}


@dataclass(frozen=True)
class WeightFunctional:
    coeffs: tuple

    def __call__(self, v):
        if len(v) != len(self.coeffs):
            raise DimensionMismatch(f"weight of length {len(self.coeffs)} applied to {v}")
        return sum(a * b for a, b in zip(self.coeffs, v))

    @property
    def rank(self):
        return len(self.coeffs)

    def check_positive(self, generators):
        bad = [v for v in generators if self(v) < 1]
        if bad:
            raise WeightMismatch(f"weight {list(self.coeffs)} is < 1 on {bad}")


class FiniteSupportFunction:
    """Element of the monoid ring Z[Z^r]."""

    def __init__(self, rank, support=None):
        self.rank = rank
        self.support = _clean({tuple(k): int(v) for k, v in (support or {}).items()})
        for k in self.support:
            if len(k) != rank:
                raise DimensionMismatch(f"exponent {k} is not of length {rank}")

    @classmethod
    def delta(cls, v, coeff=1):
        return cls(len(v), {tuple(v): coeff})

    @classmethod
    def one(cls, rank):
        return cls.delta((0,) * rank)

    def __getitem__(self, v):
        return self.support.get(tuple(v), 0)

    def __add__(self, other):
        if self.rank != other.rank:
            raise DimensionMismatch("different ranks")
        s = dict(self.support)
        for k, v in other.support.items():
            s[k] = s.get(k, 0) + v
        return FiniteSupportFunction(self.rank, s)

    def __neg__(self):
        return FiniteSupportFunction(self.rank, {k: -v for k, v in self.support.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return convolve(self, other)

    def __eq__(self, other):
        if not isinstance(other, FiniteSupportFunction):
            return NotImplemented
        return self.rank == other.rank and self.support == other.support

    def __repr__(self):
        return f"FiniteSupportFunction({self.rank}, {dict(sorted(self.support.items()))})"

    def truncate(self, weight, bound):
        if any(weight(k) < 0 for k in self.support):
            raise WeightMismatch("support has elements of negative weight")
        return TruncatedSeries(
            self.rank, {k: v for k, v in self.support.items() if weight(k) <= bound}, weight, bound
        )


class TruncatedSeries:
    """A series known exactly at every exponent of weight at most ``bound``.

    Supports must have nonnegative weight so that products stay exact.
    """

    def __init__(self, rank, support, weight, bound):
        if bound < 0:
            raise SeriesError("bound must be nonnegative")
        if weight.rank != rank:
            raise DimensionMismatch("weight and series have different ranks")
        self.rank = rank
        self.weight = weight
        self.bound = bound
        self.support = _clean({tuple(k): int(v) for k, v in support.items()})
        for k in self.support:
            if len(k) != rank:
                raise DimensionMismatch(f"exponent {k} is not of length {rank}")
            if not 0 <= weight(k) <= bound:
                raise WeightMismatch(f"exponent {k} has weight {weight(k)} outside 0..{bound}")

    def __getitem__(self, v):
        v = tuple(v)
        if self.weight(v) > self.bound:
            raise KeyError(f"{v} lies beyond the truncation bound {self.bound}")
        return self.support.get(v, 0)

    def __mul__(self, other):
        return convolve(self, other)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.weight == other.weight
            and self.bound == other.bound
            and self.support == other.support
        )

    def items(self):
        """(exponent, coefficient) pairs in lexicographic order."""
        return sorted(self.support.items())

    def __repr__(self):
        return f"TruncatedSeries(bound={self.bound}, weight={list(self.weight.coeffs)}, {dict(self.items())})"


def convolve(f, g):
    """(f*g)(l) = sum over l = m1 + m2 of f(m1) g(m2)."""
    if f.rank != g.rank:
        raise DimensionMismatch(f"ranks {f.rank} and {g.rank}")
    truncated = isinstance(f, TruncatedSeries) or isinstance(g, TruncatedSeries)
    if truncated:
        if not (isinstance(f, TruncatedSeries) and isinstance(g, TruncatedSeries)):
            raise SeriesError("truncate the finite-support factor first")
        if f.weight != g.weight:
            raise WeightMismatch("different weight functionals")
        weight, bound = f.weight, min(f.bound, g.bound)
    out = {}
    for m1, a in f.support.items():
        for m2, b in g.support.items():
            m = _vadd(m1, m2)
            if truncated and weight(m) > bound:
                continue
            out[m] = out.get(m, 0) + a * b
    if truncated:
        return TruncatedSeries(f.rank, out, weight, bound)
    return FiniteSupportFunction(f.rank, out)


def find_positive_functional(generators):
    """Integer weight l with l(v) >= 1 for every generator v."""
    generators = [tuple(v) for v in generators]
    if not generators:
        raise SeriesError("need at least one generator")
    r = len(generators[0])
    if any(len(v) != r for v in generators):
        raise DimensionMismatch("generators of different lengths")
    point = integral_point([(v, 1) for v in generators], r)
    if point is None:
        raise NoPositiveFunctional(f"no linear form is positive on {generators}")
    return WeightFunctional(tuple(point))


def expand_product(factors, weight, bound):
    """Expand prod 1/(1 - e_v)^m up to weight ``bound``.

    ``factors`` is a list of (v, m).  Each of the m copies of 1/(1 - e_v) is
    folded in as a truncated geometric series, so the coefficient at l counts
    the ways of writing l as a sum of factor exponents.
    """
    rank = weight.rank
    series = {(0,) * rank: 1}
    for v, m in factors:
        v = tuple(v)
        if len(v) != rank:
            raise DimensionMismatch(f"factor {v} is not of length {rank}")
        w = weight(v)
        if w < 1:
            raise WeightMismatch(f"factor {v} has weight {w} < 1")
        for _ in range(m):
            new = {}
            for k, c in series.items():
                j = 0
                while weight(k) + j * w <= bound:
                    key = tuple(a + j * b for a, b in zip(k, v))
                    new[key] = new.get(key, 0) + c
                    j += 1
            series = new
    return TruncatedSeries(rank, series, weight, bound)


@dataclass
class RationalSeriesExpr:
    """numerator / prod (1 - e_v)^m."""

    numerator: FiniteSupportFunction
    denominator_factors: list = field(default_factory=list)

    @property
    def rank(self):
        return self.numerator.rank

    @property
    def generators(self):
        return [v for v, _ in self.denominator_factors]

    def expand(self, weight, bound):
        return convolve(self.numerator.truncate(weight, bound), expand_product(self.denominator_factors, weight, bound))


def euler_from_classes(grouped):
    """Closed form prod 1/(1 - e_v)^m from a map class -> multiplicity.

    Keys may be class vectors or plain integer tuples.
    """
    if not grouped:
        raise SeriesError("empty class grouping")
    factors = []
    for cls, m in grouped.items():
        v = tuple(cls)
        if m < 1:
            raise SeriesError(f"multiplicity {m} for {v}")
        factors.append((v, m))
    ranks = {len(v) for v, _ in factors}
    if len(ranks) != 1:
        raise DimensionMismatch("classes of different lengths")
    factors.sort()
    return RationalSeriesExpr(FiniteSupportFunction.one(ranks.pop()), factors)


def unit_vector(n, i):
    return tuple(int(j == i) for j in range(n))


def equivariant_series(n):
    """prod_{i<n} 1/(1 - e_{u_i}) over Z^n: the free monoid on the orbits."""
    if n < 1:
        raise SeriesError("need at least one orbit")
    return RationalSeriesExpr(FiniteSupportFunction.one(n), [(unit_vector(n, i), 1) for i in range(n)])


def orbit_weights(classes, weight):
    """Weight on Z^N giving orbit i the weight of its class."""
    return WeightFunctional(tuple(weight(tuple(c)) for c in classes))


def pushforward_J(series_t, classes, weight, bound):
    """Push an equivariant expansion forward along u_i -> class_i.

    ``series_t`` must be truncated with the orbit weights induced by
    ``weight`` at the same bound, so every fiber below the bound is complete.
    """
    classes = [tuple(c) for c in classes]
    if series_t.rank != len(classes):
        raise DimensionMismatch(f"{series_t.rank} orbits but {len(classes)} classes")
    if series_t.weight != orbit_weights(classes, weight):
        raise WeightMismatch("equivariant series was not truncated with the induced orbit weights")
    if series_t.bound != bound:
        raise WeightMismatch(f"bounds differ: {series_t.bound} vs {bound}")
    out = {}
    for beta, a in series_t.support.items():
        lam = (0,) * weight.rank
        for b, v in zip(beta, classes):
            if b:
                lam = tuple(x + b * y for x, y in zip(lam, v))
        out[lam] = out.get(lam, 0) + a
    return TruncatedSeries(weight.rank, out, weight, bound)


def pushforward_finite(f, classes):
    """J on finitely supported functions."""
    classes = [tuple(c) for c in classes]
    rank = len(classes[0])
    out = {}
    for beta, a in f.support.items():
        lam = tuple(sum(b * v[k] for b, v in zip(beta, classes)) for k in range(rank))
        out[lam] = out.get(lam, 0) + a
    return FiniteSupportFunction(rank, out)

