"""Fans of projective spaces, their products, the blow-up of P^n at a point and Hirzebruch surfaces."""

from itertools import combinations, product

from .fan import make_fan


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


def gen_pn(n):
    """P^n: rays e_1..e_n and -(e_1 + ... + e_n); every n-subset is a maximal cone."""
    if n < 1:
        raise ValueError("P^n needs n >= 1")
    rays = [_unit(n, i) for i in range(n)] + [[-1] * n]
    return make_fan(n, rays, combinations(range(n + 1), n))


def gen_product_pn_pm(n, m):
    """P^n x P^m with rays e_1..e_{n+m}, -(e_1+..+e_n), -(e_{n+1}+..+e_{n+m})."""
    if n < 1 or m < 1:
        raise ValueError("P^n x P^m needs n, m >= 1")
    d = n + m
    rays = [_unit(d, i) for i in range(d)]
    rays.append([-1] * n + [0] * m)
    rays.append([0] * n + [-1] * m)
    first = list(range(n)) + [d]
    second = list(range(n, d)) + [d + 1]
    cones = [a + b for a, b in product(combinations(first, n), combinations(second, m))]
    return make_fan(d, rays, cones)


def gen_blowup_pn(n):
    """Blow-up of P^n at the fixed point of the cone spanned by e_2..e_{n+1}.

    The new ray is e_2 + ... + e_{n+1} = -e_1; the old cone is replaced by
    the n cones obtained by swapping one of its rays for the new one.
    """
    if n < 2:
        raise ValueError("blow-up of P^n needs n >= 2")
    base = gen_pn(n)
    new = n + 1
    removed = tuple(range(1, n + 1))
    cones = [c for c in base.max_cones if c != removed]
    for i in removed:
        cones.append(tuple(j for j in removed if j != i) + (new,))
    return make_fan(n, list(base.rays) + [[-1] + [0] * (n - 1)], cones)


def gen_hirzebruch(a):
    """Hirzebruch surface: rays (1,0), (0,1), (-1,a), (0,-1).

    a = 1 is accepted as well (the blow-up of P^2 at a point).
    """
    if a < 1:
        raise ValueError("Hirzebruch surface needs a >= 1")
    return make_fan(2, [[1, 0], [0, 1], [-1, a], [0, -1]], [[0, 1], [1, 2], [2, 3], [0, 3]])


GENERATORS = {
    "pn": (gen_pn, 1),
    "product": (gen_product_pn_pm, 2),
    "blowup-pn": (gen_blowup_pn, 1),
    "hirzebruch": (gen_hirzebruch, 1),
}


def from_spec(spec):
    """Build a fan from a string like ``"pn 2"``, ``"product 2 1"`` or ``"hirzebruch:3"``."""
    parts = spec.replace(":", " ").replace(",", " ").split()
    if not parts or parts[0] not in GENERATORS:
        raise ValueError(f"unknown generator {spec!r}; expected one of {sorted(GENERATORS)}")
    func, nargs = GENERATORS[parts[0]]
    if len(parts) != nargs + 1:
        raise ValueError(f"{parts[0]} takes {nargs} integer argument(s)")
    try:
        args = [int(x) for x in parts[1:]]
    except ValueError:
        raise ValueError(f"non-integer argument in {spec!r}") from None
    return func(*args)


def catalog(max_dim=None):
    """Named sample fans from every family, used by the examples verifier and the tests."""
    specs = [f"pn {n}" for n in range(1, 6)]
    specs += ["product 1 1", "product 2 1", "product 1 2", "product 2 2"]
    specs += ["blowup-pn 2", "blowup-pn 3"]
    specs += ["hirzebruch 1", "hirzebruch 2", "hirzebruch 3"]
    out = []
    for s in specs:
        fan = from_spec(s)
        if max_dim is None or fan.dim <= max_dim:
            out.append((s, fan))
    return out
