"""Rational polyhedral fans: parsing, validation and cone queries.

Fans are given by primitive lattice rays and their maximal cones, each cone a
set of 0-based ray indices.  Only simplicial fans are handled.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

from sympy import Matrix

from .fourier_motzkin import feasible_point


class FanError(ValueError):
    """Base class for malformed fan input."""


class MalformedFan(FanError):
    pass


class NonPrimitiveRay(FanError):
    pass


class ConeIndexError(FanError):
    pass


class DuplicateRay(FanError):
    pass


class NonSimplicialCone(FanError):
    pass


class InvalidFan(FanError):
    """Raised when an operation needs a smooth complete fan and did not get one."""


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check_structure(self.dim, self.rays, self.max_cones)

    @property
    def nrays(self):
        return len(self.rays)

    def to_dict(self):
        return {
            "dim": self.dim,
            "rays": [list(r) for r in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }

    def to_json(self):
        return json.dumps(self.to_dict())


def make_fan(dim, rays, max_cones):
    """Build a Fan from plain lists; cones and the cone list are sorted lexicographically."""
    rays = tuple(tuple(int(x) for x in r) for r in rays)
    cones = tuple(sorted(tuple(sorted(int(i) for i in c)) for c in max_cones))
    return Fan(int(dim), rays, cones)


def _check_structure(dim, rays, max_cones):
    if dim < 1:
        raise MalformedFan(f"dim must be positive, got {dim}")
    if not rays:
        raise MalformedFan("fan has no rays")
    seen = {}
    for i, r in enumerate(rays):
        if len(r) != dim:
            raise MalformedFan(f"ray {i} has length {len(r)}, expected {dim}")
        g = gcd(*r)
        if g == 0:
            raise NonPrimitiveRay(f"ray {i} is zero")
        if g != 1:
            raise NonPrimitiveRay(f"ray {i} = {list(r)} is not primitive (gcd {g})")
        if r in seen:
            raise DuplicateRay(f"rays {seen[r]} and {i} coincide")
        seen[r] = i
    if not max_cones:
        raise MalformedFan("fan has no maximal cones")
    for c in max_cones:
        if not c:
            raise MalformedFan("empty maximal cone")
        if any(i < 0 or i >= len(rays) for i in c):
            raise ConeIndexError(f"cone {list(c)} has an index outside 0..{len(rays) - 1}")
        if len(set(c)) != len(c) or list(c) != sorted(c):
            raise MalformedFan(f"cone {list(c)} has repeated indices")
        if len(c) > dim:
            raise NonSimplicialCone(f"cone {list(c)} has {len(c)} rays in dimension {dim}")
    if len(set(max_cones)) != len(max_cones):
        raise MalformedFan("repeated maximal cone")


def parse_fan(text):
    """Parse the JSON fan format ``{"dim", "rays", "max_cones"}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFan(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise MalformedFan("top level must be an object")
    keys = set(data)
    expected = {"dim", "rays", "max_cones"}
    if keys - expected:
        raise MalformedFan(f"unknown keys: {sorted(keys - expected)}")
    if expected - keys:
        raise MalformedFan(f"missing keys: {sorted(expected - keys)}")

    def is_int(x):
        return isinstance(x, int) and not isinstance(x, bool)

    dim = data["dim"]
    if not is_int(dim):
        raise MalformedFan("dim must be an integer")
    for name in ("rays", "max_cones"):
        v = data[name]
        if not isinstance(v, list) or not all(
            isinstance(row, list) and all(is_int(x) for x in row) for row in v
        ):
            raise MalformedFan(f"{name} must be a list of integer lists")
    for c in data["max_cones"]:
        if len(set(c)) != len(c):
            raise MalformedFan(f"cone {c} has repeated indices")
    return make_fan(dim, data["rays"], data["max_cones"])


# --- validation -------------------------------------------------------------


@dataclass
class Violation:
    kind: str  # "simplicial" | "smooth" | "pure" | "wall" | "fan"
    cones: list
    detail: str
    value: int | None = None

    def to_dict(self):
        d = {"kind": self.kind, "cones": [list(c) for c in self.cones], "detail": self.detail}
        if self.value is not None:
            d["value"] = self.value
        return d


@dataclass
class ValidationReport:
    simplicial: bool
    smooth: bool
    complete: bool
    fan_property: bool
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return self.simplicial and self.smooth and self.complete and self.fan_property

    def to_dict(self):
        return {
            "simplicial": self.simplicial,
            "smooth": self.smooth,
            "complete": self.complete,
            "fan_property": self.fan_property,
            "violations": [v.to_dict() for v in self.violations],
        }


def _ray_matrix(fan, cone):
    return Matrix([list(fan.rays[i]) for i in cone])


def _index(fan, cone):
    """Gcd of the maximal minors of the cone's ray matrix; 0 if the rays are dependent."""
    m = _ray_matrix(fan, cone)
    k = len(cone)
    g = 0
    for cols in combinations(range(fan.dim), k):
        g = gcd(g, int(m[:, list(cols)].det()))
    return g


def _wall_normal(fan, wall):
    ns = _ray_matrix(fan, wall).nullspace()
    assert len(ns) == 1
    return [Fraction(int(x.p), int(x.q)) for x in ns[0]]


def _separated(fan, s, t):
    """True iff some linear form vanishes on the shared rays, is > 0 on the rest of s and < 0 on the rest of t."""
    common = set(s) & set(t)
    cons = []
    for i in common:
        v = fan.rays[i]
        cons.append((v, 0))
        cons.append((tuple(-x for x in v), 0))
    for i in set(s) - common:
        cons.append((fan.rays[i], 1))
    for i in set(t) - common:
        cons.append((tuple(-x for x in fan.rays[i]), 1))
    return feasible_point(cons, fan.dim) is not None


def validate_fan(fan):
    """Check simplicial, smooth, complete and the fan (common face) property.

    Problems are collected as witnesses in the report, never raised.
    """
    violations = []
    simplicial = smooth = True
    for c in fan.max_cones:
        idx = _index(fan, c)
        if idx == 0:
            simplicial = smooth = False
            violations.append(Violation("simplicial", [c], "rays are linearly dependent"))
        elif idx != 1:
            smooth = False
            detail = f"|det| = {idx}" if len(c) == fan.dim else f"lattice index {idx}"
            violations.append(Violation("smooth", [c], detail, idx))

    fan_property = True
    if simplicial:
        for s, t in combinations(fan.max_cones, 2):
            if not _separated(fan, s, t):
                fan_property = False
                violations.append(Violation("fan", [s, t], "cones do not meet in a common face"))

    complete = True
    used = {i for c in fan.max_cones for i in c}
    for i in range(fan.nrays):
        if i not in used:
            complete = False
            violations.append(Violation("pure", [], f"ray {i} lies in no maximal cone"))
    for c in fan.max_cones:
        if len(c) != fan.dim:
            complete = False
            violations.append(Violation("pure", [c], f"maximal cone of dimension {len(c)} < {fan.dim}"))
    if complete and simplicial:
        walls = {}
        for c in fan.max_cones:
            for w in combinations(c, fan.dim - 1):
                walls.setdefault(w, []).append(c)
        for w, cs in sorted(walls.items()):
            if len(cs) != 2:
                complete = False
                violations.append(
                    Violation("wall", [w] + cs, f"wall borders {len(cs)} maximal cone(s)", len(cs))
                )
                continue
            normal = _wall_normal(fan, w) if w else [Fraction(1)]
            sides = []
            for c in cs:
                (extra,) = set(c) - set(w)
                sides.append(sum(a * b for a, b in zip(normal, fan.rays[extra])))
            if sides[0] * sides[1] >= 0:
                complete = False
                violations.append(Violation("wall", [w] + cs, "both cones lie on the same side of the wall"))
    return ValidationReport(simplicial, smooth, complete, fan_property, violations)


def require_smooth_complete(fan):
    report = validate_fan(fan)
    if not report.ok:
        msgs = "; ".join(f"{v.kind}: {v.detail}" for v in report.violations)
        raise InvalidFan(f"fan is not smooth and complete ({msgs})")
    return report


# --- cone queries -----------------------------------------------------------


def enumerate_cones(fan, d):
    """All d-dimensional cones, lexicographically sorted by ray indices."""
    if not 0 <= d <= fan.dim:
        raise ValueError(f"cone dimension {d} outside 0..{fan.dim}")
    faces = {f for c in fan.max_cones for f in combinations(c, d)}
    return sorted(faces)


def is_cone_of_fan(fan, rays):
    rays = set(rays)
    if any(i < 0 or i >= fan.nrays for i in rays):
        raise IndexError("ray index out of range")
    return any(rays <= set(c) for c in fan.max_cones)


def f_vector(fan):
    return [len(enumerate_cones(fan, d)) for d in range(fan.dim + 1)]


def h_vector(fan):
    """h-vector from sum_i f_i (s-1)^(n-i) = sum_p h_p s^p."""
    n = fan.dim
    h = [0] * (n + 1)
    for i, fi in enumerate(f_vector(fan)):
        # expand (s-1)^(n-i)
        e = n - i
        coeff = 1
        for k in range(e + 1):
            # coefficient of s^k in (s-1)^e is C(e,k) (-1)^(e-k)
            h[k] += fi * coeff * (-1) ** (e - k)
            coeff = coeff * (e - k) // (k + 1)
    return h


def minimal_non_faces(fan):
    """Ray sets that span no cone while every proper subset does."""
    out = []
    for k in range(2, fan.dim + 2):
        for s in combinations(range(fan.nrays), k):
            if is_cone_of_fan(fan, s):
                continue
            if all(is_cone_of_fan(fan, t) for t in combinations(s, k - 1)):
                out.append(s)
    return out
