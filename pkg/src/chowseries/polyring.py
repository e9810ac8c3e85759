"""Sparse multivariate polynomials over Q with degrevlex Groebner bases.

Monomials are exponent tuples; variable 0 has the highest priority
(t1 > t2 > ... > tK).  Coefficients are ``Fraction`` so nothing overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


class RingMismatch(ValueError):
    pass


def degrevlex_key(m):
    """Sort key: larger key means larger monomial in degrevlex."""
    return (sum(m), tuple(-e for e in reversed(m)))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Immutable polynomial: a map from exponent tuples to nonzero Fractions."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise RingMismatch(f"monomial {m} does not have {nvars} exponents")
            c = Fraction(c)
            if c:
                clean[tuple(m)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exponents, coeff=1):
        return cls(len(exponents), {tuple(exponents): coeff})

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise RingMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Polynomial.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        """Terms in decreasing degrevlex order."""
        return sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)

    @property
    def leading_monomial(self):
        return max(self.terms, key=degrevlex_key)

    @property
    def leading_coeff(self):
        return self.terms[self.leading_monomial]

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def monic(self):
        lc = self.leading_coeff
        return Polynomial(self.nvars, {m: c / lc for m, c in self.terms.items()})

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)


def format_monomial(m, names=None):
    parts = []
    for i, e in enumerate(m):
        if e:
            name = names[i] if names else f"t{i + 1}"
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) or "1"


def format_polynomial(p, names=None):
    if p.is_zero():
        return "0"
    out = []
    for m, c in p.sorted_terms():
        mono = format_monomial(m, names)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if mono == "1":
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        out.append((sign, body))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def substitute(p, images):
    """Ring map sending variable i to ``images[i]``."""
    if len(images) != p.nvars:
        raise RingMismatch("need one image per variable")
    target = images[0].nvars if images else 0
    out = Polynomial.zero(target)
    for m, c in p.terms.items():
        term = Polynomial.constant(target, c)
        for i, e in enumerate(m):
            if e:
                term = term * images[i] ** e
        out = out + term
    return out


# --- Groebner bases ---------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    nvars: int
    generators: tuple
    order: str = "degrevlex"

    @property
    def leading_monomials(self):
        return [g.leading_monomial for g in self.generators]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _reduce(p, basis):
    """Full division remainder of p by basis (a list of monic polynomials)."""
    leads = [(g.leading_monomial, g) for g in basis]
    work = dict(p.terms)
    rem = {}
    while work:
        m = max(work, key=degrevlex_key)
        c = work.pop(m)
        for lm, g in leads:
            if _divides(lm, m):
                q = _mono_div(m, lm)
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    t = _mono_mul(gm, q)
                    v = work.get(t, 0) - c * gc
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            rem[m] = c
    return Polynomial(p.nvars, rem)


def normal_form(p, gb):
    """Remainder of p on division by gb; no term is divisible by a leading monomial."""
    gens = gb.generators if isinstance(gb, GroebnerBasis) else [g.monic() for g in gb]
    nvars = gb.nvars if isinstance(gb, GroebnerBasis) else p.nvars
    if p.nvars != nvars:
        raise RingMismatch(f"{p.nvars} vs {nvars} variables")
    return _reduce(p, gens)


def s_polynomial(f, g):
    lf, lg = f.leading_monomial, g.leading_monomial
    l = _lcm(lf, lg)
    a = Polynomial.monomial(_mono_div(l, lf), 1 / f.leading_coeff)
    b = Polynomial.monomial(_mono_div(l, lg), 1 / g.leading_coeff)
    return a * f - b * g


def buchberger(gens):
    """Reduced degrevlex Groebner basis of the ideal generated by ``gens``.

    Pairs are processed lowest lcm degree first; pairs with coprime leading
    monomials are skipped.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator to fix the variable count")
    nvars = gens[0].nvars
    for g in gens:
        if g.nvars != nvars:
            raise RingMismatch("generators live in different rings")
    basis = [g.monic() for g in gens if not g.is_zero()]
    pairs = set(combinations(range(len(basis)), 2))

    def pair_key(ij):
        l = _lcm(basis[ij[0]].leading_monomial, basis[ij[1]].leading_monomial)
        return (sum(l), degrevlex_key(l), ij)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        lf, lg = basis[i].leading_monomial, basis[j].leading_monomial
        if all(a == 0 or b == 0 for a, b in zip(lf, lg)):
            continue
        h = _reduce(s_polynomial(basis[i], basis[j]), basis)
        if h:
            basis.append(h.monic())
            k = len(basis) - 1
            pairs.update((a, k) for a in range(k))
    return GroebnerBasis(nvars, tuple(_interreduce(basis)))


def _interreduce(basis):
    minimal = []
    for i, g in enumerate(basis):
        lm = g.leading_monomial
        redundant = False
        for j, h in enumerate(basis):
            if i == j:
                continue
            hm = h.leading_monomial
            if _divides(hm, lm) and (hm != lm or j < i):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm = g.leading_monomial
        tail = Polynomial(g.nvars, {m: c for m, c in g.terms.items() if m != lm})
        out.append(Polynomial.monomial(lm) + _reduce(tail, others))
    return sorted(out, key=lambda g: degrevlex_key(g.leading_monomial))


def is_groebner(gb):
    """Every S-polynomial of a pair of generators reduces to zero."""
    gens = list(gb.generators)
    return all(_reduce(s_polynomial(f, g), gens).is_zero() for f, g in combinations(gens, 2))


def monomials_of_degree(nvars, d):
    """All exponent tuples of total degree d, decreasing in degrevlex."""
    def rec(k, rest):
        if k == nvars - 1:
            yield (rest,)
            return
        for e in range(rest, -1, -1):
            for tail in rec(k + 1, rest - e):
                yield (e,) + tail

    if nvars == 0:
        return [()] if d == 0 else []
    return sorted(rec(0, d), key=degrevlex_key, reverse=True)


def standard_monomials(gb, d):
    """Degree-d monomials divisible by no leading monomial, decreasing in degrevlex."""
    leads = gb.leading_monomials
    return [m for m in monomials_of_degree(gb.nvars, d) if not any(_divides(l, m) for l in leads)]
