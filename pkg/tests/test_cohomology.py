from collections import Counter
from fractions import Fraction
from types import SimpleNamespace

import pytest

from chowseries.builtins import gen_blowup_pn, gen_hirzebruch, gen_pn
from chowseries.cohomology import (
    ClassVector,
    NonIntegralCoordinate,
    _lattice_basis,
    build_presentation,
    cohomology_rank,
    orbit_class,
    orbit_class_table,
)
from chowseries.fan import InvalidFan, enumerate_cones, h_vector, make_fan
from chowseries.polyring import Polynomial

from conftest import FANS, presentation


def var(K, i):
    return Polynomial.variable(K, i)


def test_p2_presentation():
    pres = presentation("pn 2")
    t1, t2, t3 = (var(3, i) for i in range(3))
    assert pres.sr_generators == (t1 * t2 * t3,)
    assert pres.linear_generators == (t1 - t3, t2 - t3)
    assert [cohomology_rank(pres, p) for p in range(3)] == [1, 1, 1]
    assert pres.standard_labels(1) == ["t3"]


@pytest.mark.parametrize("a", [1, 2, 3])
def test_hirzebruch_presentation(a):
    pres = build_presentation(gen_hirzebruch(a))
    t1, t2, t3, t4 = (var(4, i) for i in range(4))
    assert set(pres.sr_generators) == {t1 * t3, t2 * t4}
    assert pres.linear_generators == (t1 - t3, t2 + a * t3 - t4)
    assert pres.standard_labels(1) == ["t3", "t4"]
    assert cohomology_rank(pres, 1) == 2


def test_blowup_linear_relations():
    pres = presentation("blowup-pn 2")
    s = [var(4, i) for i in range(4)]
    # s2 ~ s3 and s1 ~ s3 + s4
    assert pres.reduce(s[1] - s[2]).is_zero()
    assert pres.reduce(s[0] - s[2] - s[3]).is_zero()


def test_rank_bounds():
    pres = presentation("pn 2")
    assert cohomology_rank(pres, 0) == 1
    with pytest.raises(ValueError):
        cohomology_rank(pres, 3)
    with pytest.raises(ValueError):
        orbit_class_table(pres, -1)


def test_orbit_class_p2():
    pres = presentation("pn 2")
    for i in range(3):
        assert orbit_class(pres, (i,)) == ClassVector((1,), 1)


def test_orbit_class_hirzebruch():
    pres = presentation("hirzebruch 2")
    assert orbit_class(pres, (1,)).coords == (-2, 1)
    assert orbit_class(pres, (0,)).coords == (1, 0)
    assert orbit_class(pres, (2,)).coords == (1, 0)
    with pytest.raises(ValueError):
        orbit_class(pres, (0, 2))


def test_table_p2():
    table = orbit_class_table(presentation("pn 2"), 1)
    assert table.grouped == {ClassVector((1,), 1): 3}


def test_table_hirzebruch():
    pres = presentation("hirzebruch 2")
    g1 = {c.coords: m for c, m in orbit_class_table(pres, 1).grouped.items()}
    assert g1 == {(1, 0): 2, (0, 1): 1, (-2, 1): 1}
    g2 = {c.coords: m for c, m in orbit_class_table(pres, 2).grouped.items()}
    assert g2 == {(1,): 4}


def test_hirzebruch_top_degree_is_integral():
    # t4^2 = a [pt]: the standard monomial alone is not a Z-basis here
    pres = presentation("hirzebruch 3")
    t4 = var(4, 3)
    assert pres.class_of(t4 * t4).coords == (3,)
    assert pres.standard_coordinates(t4 * t4, 2) == [1]
    assert pres.class_of(var(4, 0) * var(4, 1)).coords == (1,)


def test_non_integral_coordinate_raised():
    pres = presentation("hirzebruch 2")
    t4 = var(4, 3)
    # t4^2 = 2 [pt], so a quarter of it is half a point
    with pytest.raises(NonIntegralCoordinate):
        pres.class_of(Polynomial.constant(4, Fraction(1, 4)) * t4 * t4)


def test_requires_smooth_complete():
    fan = make_fan(2, [[1, 0], [1, 2], [-1, -1]], [[0, 1], [1, 2], [0, 2]])
    with pytest.raises(InvalidFan):
        build_presentation(fan)


def test_builtin_invariants(builtin):
    name, fan, pres = builtin
    n = fan.dim
    h = h_vector(fan)
    for p in range(n + 1):
        assert cohomology_rank(pres, p) == h[p]
        assert cohomology_rank(pres, p) == cohomology_rank(pres, n - p)
        table = orbit_class_table(pres, p)
        cones = enumerate_cones(fan, p)
        assert sum(table.grouped.values()) == len(cones)
        monos = [row[1] for row in table.rows]
        assert len(set(monos)) == len(monos)
        assert all(sum(m) == p and max(m, default=0) <= 1 for m in monos)
        assert all(isinstance(x, int) for c in table.classes for x in c.coords)
    assert cohomology_rank(pres, 0) == 1


def test_elimination_prepass_agrees(builtin):
    name, fan, pres = builtin
    fast = build_presentation(fan, eliminate=True)
    assert fast.gb.nvars == fan.nrays - fan.dim
    for p in range(fan.dim + 1):
        assert cohomology_rank(fast, p) == cohomology_rank(pres, p)
        a = Counter(orbit_class_table(pres, p).grouped.values())
        b = Counter(orbit_class_table(fast, p).grouped.values())
        assert a == b
        assert orbit_class_table(pres, p).grouped == orbit_class_table(fast, p).grouped


def test_pn_point_class_positive():
    for n in (1, 2, 3):
        pres = build_presentation(gen_pn(n))
        assert {c.coords for c in orbit_class_table(pres, n).classes} == {(1,)}
    pres = build_presentation(gen_blowup_pn(2))
    assert {c.coords for c in orbit_class_table(pres, 2).classes} == {(1,)}


def test_lattice_basis_hnf_fallback():
    # no two orbit classes form a basis of the lattice they span
    vectors = {(1, 0, 0): [4, 0], (0, 1, 0): [0, 2], (0, 0, 1): [2, 0]}
    pres = SimpleNamespace(
        fan=SimpleNamespace(dim=1, max_cones=((0,), (1,), (2,))),
        nvars=3,
        kept=(0, 1),
        basis_by_degree={1: [(1, 0), (0, 1)]},
        standard_coordinates=lambda poly, p: [Fraction(x) for x in vectors[poly.leading_monomial]],
    )
    rows, labels = _lattice_basis(pres, 1)
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    assert abs(det) == 4
    for v in vectors.values():
        # v = a*rows[0] + b*rows[1] with a, b integers
        a = (v[0] * rows[1][1] - v[1] * rows[1][0]) / det
        b = (rows[0][0] * v[1] - rows[0][1] * v[0]) / det
        assert a.denominator == 1 and b.denominator == 1
    assert len(labels) == 2
