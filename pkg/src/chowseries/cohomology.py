"""Cohomology rings of smooth complete toric varieties and classes of orbit closures.

The ring is Q[t_1..t_K] modulo the Stanley-Reisner ideal of the fan and the n
linear forms sum_j <u_i, v_j> t_j.  Classes are compared through their
degrevlex normal forms.

Coordinates are taken in an integral basis of each graded piece.  When the
degree-p standard monomials already form a Z-basis of the lattice spanned by
the orbit classes they are used as is.  Otherwise (e.g. t4^2 is twice the
point class on the Hirzebruch surface with a = 2) the basis is a set of orbit
classes if one generates the lattice, and a Hermite normal form basis if not.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from .fan import enumerate_cones, h_vector, minimal_non_faces, require_smooth_complete
from .polyring import (
    GroebnerBasis,
    Polynomial,
    buchberger,
    format_monomial,
    format_polynomial,
    normal_form,
    standard_monomials,
    substitute,
)


class NonIntegralCoordinate(ArithmeticError):
    """A class has non-integral coordinates in the chosen monomial basis."""


class PresentationError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class ClassVector:
    coords: tuple
    degree: int

    def __add__(self, other):
        if self.degree != other.degree or len(self.coords) != len(other.coords):
            raise ValueError("classes of different degree")
        return ClassVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.degree)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def scale(self, k):
        return ClassVector(tuple(k * a for a in self.coords), self.degree)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class CohomologyPresentation:
    fan: object
    sr_generators: tuple
    linear_generators: tuple
    gb: GroebnerBasis
    basis_by_degree: dict
    # variables of the ring the Groebner basis lives in, as original ray indices
    kept: tuple
    # image of each t_i in that ring
    images: tuple
    # per degree: integral basis vectors in standard-monomial coordinates,
    # the inverse change of basis, and printable labels
    lattice_basis: dict
    lattice_inverse: dict
    lattice_labels: dict

    @property
    def nvars(self):
        return self.fan.nrays

    def rank(self, p):
        return cohomology_rank(self, p)

    def reduce(self, poly):
        """Normal form of a polynomial in t_1..t_K (returned in the Groebner ring)."""
        if poly.nvars != self.nvars:
            raise ValueError(f"expected a polynomial in {self.nvars} variables")
        return normal_form(substitute(poly, list(self.images)), self.gb)

    def standard_coordinates(self, poly, p=None):
        """Rational coordinates of a degree-p polynomial w.r.t. the standard monomials."""
        if p is None:
            p = poly.degree() if poly else 0
        if p not in self.basis_by_degree:
            raise ValueError(f"degree {p} outside 0..{self.fan.dim}")
        nf = self.reduce(poly)
        if nf and not (nf.is_homogeneous() and nf.degree() == p):
            raise ValueError(f"polynomial is not homogeneous of degree {p}")
        index = {m: i for i, m in enumerate(self.basis_by_degree[p])}
        coords = [Fraction(0)] * len(index)
        for m, c in nf.terms.items():
            coords[index[m]] = c
        return coords

    def class_of(self, poly, p=None):
        """Integer coordinates of a homogeneous polynomial in the degree-p lattice basis."""
        if p is None:
            p = poly.degree() if poly else 0
        v = self.standard_coordinates(poly, p)
        inv = self.lattice_inverse[p]
        coords = [sum(v[i] * inv[i][j] for i in range(len(v))) for j in range(len(v))]
        if any(c.denominator != 1 for c in coords):
            raise NonIntegralCoordinate(f"class of {poly} has coordinates {[str(c) for c in coords]}")
        return ClassVector(tuple(int(c) for c in coords), p)

    def basis_labels(self, p):
        """Degree-p basis elements written in the original t_i names."""
        return list(self.lattice_labels[p])

    def standard_labels(self, p):
        names = [f"t{i + 1}" for i in self.kept]
        return [format_monomial(m, names) for m in self.basis_by_degree[p]]


def _cone_monomial(nvars, cone):
    e = [0] * nvars
    for i in cone:
        e[i] = 1
    return tuple(e)


def linear_relations(fan):
    K = fan.nrays
    out = []
    for i in range(fan.dim):
        terms = {}
        for j, v in enumerate(fan.rays):
            if v[i]:
                terms[_cone_monomial(K, (j,))] = v[i]
        out.append(Polynomial(K, terms))
    return tuple(out)


def _elimination_images(fan):
    """Solve the linear relations for the rays of the first maximal cone.

    Returns the kept ray indices and, for every t_i, its image as a
    polynomial in the kept variables.  The cone is a lattice basis, so the
    substitution has integer coefficients.
    """
    sigma = fan.max_cones[0]
    kept = tuple(i for i in range(fan.nrays) if i not in sigma)
    A = Matrix([[fan.rays[j][i] for j in sigma] for i in range(fan.dim)])
    B = Matrix([[fan.rays[j][i] for j in kept] for i in range(fan.dim)])
    sol = -A.inv() * B
    r = len(kept)
    images = []
    for j in range(fan.nrays):
        if j in kept:
            images.append(Polynomial.variable(r, kept.index(j)))
        else:
            row = sigma.index(j)
            terms = {}
            for k in range(r):
                c = sol[row, k]
                if c:
                    e = [0] * r
                    e[k] = 1
                    terms[tuple(e)] = Fraction(int(c.p), int(c.q))
            images.append(Polynomial(r, terms))
    return kept, tuple(images)


def build_presentation(fan, eliminate=False):
    """Presentation of the cohomology ring of X(fan) with cached graded bases.

    With ``eliminate=True`` the n variables of the first maximal cone are
    solved away through the linear relations before the Groebner basis is
    computed; graded dimensions are the same either way.
    """
    require_smooth_complete(fan)
    K = fan.nrays
    sr = tuple(Polynomial(K, {_cone_monomial(K, s): 1}) for s in minimal_non_faces(fan))
    lin = linear_relations(fan)
    if eliminate:
        kept, images = _elimination_images(fan)
        gens = [substitute(g, list(images)) for g in sr]
        nv = len(kept)
        gb = buchberger(gens) if gens else GroebnerBasis(nv, ())
    else:
        kept = tuple(range(K))
        images = tuple(Polynomial.variable(K, i) for i in range(K))
        gb = buchberger(list(lin) + list(sr))
    basis = {p: tuple(standard_monomials(gb, p)) for p in range(fan.dim + 1)}
    h = h_vector(fan)
    dims = [len(basis[p]) for p in range(fan.dim + 1)]
    if dims != h:
        raise PresentationError(f"graded dimensions {dims} differ from the h-vector {h}")
    pres = CohomologyPresentation(fan, sr, lin, gb, basis, kept, images, {}, {}, {})
    for p in range(fan.dim + 1):
        vecs, labels = _lattice_basis(pres, p)
        pres.lattice_basis[p] = vecs
        pres.lattice_inverse[p] = _inverse(vecs)
        pres.lattice_labels[p] = labels
    return pres


def _inverse(rows):
    inv = Matrix(rows).inv()
    return tuple(
        tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(inv.cols))
        for i in range(inv.rows)
    )


def _lattice_basis(pres, p):
    """Choose the integral basis of the degree-p piece (see module docstring)."""
    r = len(pres.basis_by_degree[p])
    cones = enumerate_cones(pres.fan, p)
    vecs = [pres.standard_coordinates(Polynomial.monomial(_cone_monomial(pres.nvars, c)), p) for c in cones]
    den = lcm(*(x.denominator for v in vecs for x in v))
    ints = [[int(x * den) for x in v] for v in vecs]
    hnf = hermite_normal_form(Matrix(ints).T)
    if hnf.shape != (r, r):
        raise PresentationError(f"orbit classes do not span the degree-{p} piece")
    covolume = abs(hnf.det())
    names = [f"t{i + 1}" for i in pres.kept]

    if den == 1 and covolume == 1:
        rows = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
        labels = [format_monomial(m, names) for m in pres.basis_by_degree[p]]
        if r == 1 and all(v[0] <= 0 for v in vecs):
            rows = [[Fraction(-1)]]
            labels = ["-" + labels[0]]
        return tuple(map(tuple, rows)), tuple(labels)

    chosen, labels = [], []
    full = [f"t{i + 1}" for i in range(pres.nvars)]
    for cone, v in zip(cones, ints):
        if Matrix(chosen + [v]).rank() == len(chosen) + 1:
            chosen.append(v)
            labels.append(format_monomial(_cone_monomial(pres.nvars, cone), full))
            if len(chosen) == r:
                break
    if abs(Matrix(chosen).det()) == covolume:
        return tuple(tuple(Fraction(x, den) for x in v) for v in chosen), tuple(labels)

    rows = [tuple(Fraction(int(hnf[i, j]), den) for i in range(r)) for j in range(r)]
    labels = []
    for row in rows:
        poly = Polynomial(len(pres.kept), dict(zip(pres.basis_by_degree[p], row)))
        labels.append(format_polynomial(poly, names))
    return tuple(rows), tuple(labels)


def cohomology_rank(pres, p):
    if not 0 <= p <= pres.fan.dim:
        raise ValueError(f"codimension {p} outside 0..{pres.fan.dim}")
    return len(pres.basis_by_degree[p])


def orbit_class(pres, cone):
    """Class of the orbit closure of a cone: the product of its divisor variables."""
    cone = tuple(sorted(cone))
    if not any(set(cone) <= set(c) for c in pres.fan.max_cones):
        raise ValueError(f"{list(cone)} is not a cone of the fan")
    mono = Polynomial.monomial(_cone_monomial(pres.nvars, cone))
    return pres.class_of(mono, len(cone))


@dataclass(frozen=True)
class OrbitClassTable:
    p: int
    rows: tuple  # (cone, square-free exponent tuple, ClassVector)
    grouped: dict  # ClassVector -> multiplicity, sorted by coordinates

    @property
    def classes(self):
        return [row[2] for row in self.rows]


def orbit_class_table(pres, p):
    if not 0 <= p <= pres.fan.dim:
        raise ValueError(f"codimension {p} outside 0..{pres.fan.dim}")
    rows = []
    for cone in enumerate_cones(pres.fan, p):
        rows.append((cone, _cone_monomial(pres.nvars, cone), orbit_class(pres, cone)))
    counts = Counter(r[2] for r in rows)
    grouped = {c: counts[c] for c in sorted(counts)}
    return OrbitClassTable(p, tuple(rows), grouped)
