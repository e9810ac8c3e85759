import json
from itertools import combinations

import pytest
import sympy

from chowseries.builtins import gen_blowup_pn, gen_hirzebruch, gen_pn
from chowseries.fan import (
    ConeIndexError,
    DuplicateRay,
    MalformedFan,
    NonPrimitiveRay,
    NonSimplicialCone,
    enumerate_cones,
    f_vector,
    h_vector,
    is_cone_of_fan,
    make_fan,
    minimal_non_faces,
    parse_fan,
    validate_fan,
)

from conftest import CATALOG

P2_TEXT = '{"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[0,2]]}'


def test_parse_p2():
    fan = parse_fan(P2_TEXT)
    assert fan.dim == 2
    assert fan.rays == ((1, 0), (0, 1), (-1, -1))
    assert fan.max_cones == ((0, 1), (0, 2), (1, 2))
    assert fan == gen_pn(2)


def test_parse_p1():
    fan = parse_fan('{"dim":1,"rays":[[1],[-1]],"max_cones":[[0],[1]]}')
    assert fan == gen_pn(1)


def test_round_trip():
    fan = gen_hirzebruch(3)
    assert parse_fan(fan.to_json()) == fan


@pytest.mark.parametrize(
    "text, error",
    [
        ('{"dim":2,"rays":[[2,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[0,2]]}', NonPrimitiveRay),
        ('{"dim":2,"rays":[[0,0],[0,1]],"max_cones":[[0,1]]}', NonPrimitiveRay),
        ('{"dim":2,"rays":[[1,0],[0,1]],"max_cones":[[0,5]]}', ConeIndexError),
        ('{"dim":2,"rays":[[1,0],[0,1]],"max_cones":[[-1,0]]}', ConeIndexError),
        ('{"dim":2,"rays":[[1,0],[1,0]],"max_cones":[[0,1]]}', DuplicateRay),
        ('{"dim":2,"rays":[[1,0],[0,1],[1,1]],"max_cones":[[0,1,2]]}', NonSimplicialCone),
        ('{"dim":2,"rays":[[1,0],[0,1]],"max_cones":[[0,1]],"name":"x"}', MalformedFan),
        ('{"dim":2,"rays":[[1,0],[0,1]]}', MalformedFan),
        ('{"dim":2,"rays":[[1,0],[0,1]],"max_cones":[[0,0]]}', MalformedFan),
        ('{"dim":2,"rays":[[1,0,0]],"max_cones":[[0]]}', MalformedFan),
        ('{"dim":true,"rays":[[1,0]],"max_cones":[[0]]}', MalformedFan),
        ('{"dim":2,"rays":[[1.5,0]],"max_cones":[[0]]}', MalformedFan),
        ('[1, 2]', MalformedFan),
        ('{"dim":2,', MalformedFan),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_fan(text)


def test_validate_p2():
    r = validate_fan(gen_pn(2))
    assert (r.simplicial, r.smooth, r.complete, r.fan_property) == (True, True, True, True)
    assert r.violations == []


def test_validate_det_two():
    fan = make_fan(2, [[1, 0], [1, 2], [-1, -1]], [[0, 1], [1, 2], [0, 2]])
    r = validate_fan(fan)
    assert not r.smooth and r.simplicial
    (v,) = r.violations
    assert v.kind == "smooth" and v.value == 2 and v.cones == [(0, 1)]


def test_validate_missing_cone():
    p2 = gen_pn(2)
    fan = make_fan(2, p2.rays, p2.max_cones[:2])
    r = validate_fan(fan)
    assert r.smooth and not r.complete
    walls = [v for v in r.violations if v.kind == "wall"]
    assert walls and all(v.value == 1 for v in walls)


def test_validate_overlapping_cones():
    # cone((1,0),(1,1)) sits inside cone((1,0),(0,1))
    fan = make_fan(2, [[1, 0], [0, 1], [1, 1]], [[0, 1], [0, 2]])
    r = validate_fan(fan)
    assert not r.fan_property
    assert any(v.kind == "fan" and v.cones == [(0, 1), (0, 2)] for v in r.violations)


def test_validate_same_side_wall():
    # two cones both above the wall spanned by (1,0); they overlap
    fan = make_fan(2, [[1, 0], [0, 1], [-1, 1]], [[0, 1], [0, 2]])
    r = validate_fan(fan)
    assert not r.complete
    assert any("same side" in v.detail for v in r.violations)


def test_validate_lower_dimensional_cone():
    fan = make_fan(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [2]])
    r = validate_fan(fan)
    assert not r.complete
    assert any(v.kind == "pure" for v in r.violations)


def test_validate_dependent_rays():
    fan = make_fan(2, [[1, 0], [-1, 0]], [[0, 1]])
    r = validate_fan(fan)
    assert not r.simplicial


def test_enumerate_cones_p2():
    fan = gen_pn(2)
    assert enumerate_cones(fan, 0) == [()]
    assert enumerate_cones(fan, 1) == [(0,), (1,), (2,)]
    assert enumerate_cones(fan, 2) == [(0, 1), (0, 2), (1, 2)]
    with pytest.raises(ValueError):
        enumerate_cones(fan, 3)


def test_enumerate_cones_hirzebruch():
    assert len(enumerate_cones(gen_hirzebruch(2), 2)) == 4


def test_is_cone_of_fan():
    assert is_cone_of_fan(gen_pn(2), {0, 1})
    assert not is_cone_of_fan(gen_pn(2), {0, 1, 2})
    assert not is_cone_of_fan(gen_blowup_pn(2), {0, 3})
    with pytest.raises(IndexError):
        is_cone_of_fan(gen_pn(2), {7})


@pytest.mark.parametrize("name, fan", CATALOG)
def test_cone_enumeration_properties(name, fan):
    for d in range(fan.dim + 1):
        cones = enumerate_cones(fan, d)
        assert cones == sorted(set(cones))
        assert enumerate_cones(fan, d) == cones
        if d:
            lower = set(enumerate_cones(fan, d - 1))
            for c in cones:
                assert all(f in lower for f in combinations(c, d - 1))


@pytest.mark.parametrize("name, fan", CATALOG)
def test_h_vector_oracle(name, fan):
    # independent expansion of sum f_i (s-1)^(n-i)
    s = sympy.Symbol("s")
    f = f_vector(fan)
    poly = sympy.Poly(sum(fi * (s - 1) ** (fan.dim - i) for i, fi in enumerate(f)), s)
    expected = [int(poly.coeff_monomial(s**k)) for k in range(fan.dim + 1)]
    assert h_vector(fan) == expected
    assert all(h >= 0 for h in expected)
    assert f[fan.dim] == len(fan.max_cones)
    assert sum(expected) == len(fan.max_cones)


@pytest.mark.parametrize("name, fan", CATALOG)
def test_builtins_smooth_complete(name, fan):
    r = validate_fan(fan)
    assert r.ok, r.violations
    for c in fan.max_cones:
        assert abs(sympy.Matrix([fan.rays[i] for i in c]).det()) == 1


def test_minimal_non_faces():
    assert minimal_non_faces(gen_pn(2)) == [(0, 1, 2)]
    assert minimal_non_faces(gen_hirzebruch(2)) == [(0, 2), (1, 3)]


def test_json_schema_dump():
    data = json.loads(gen_pn(2).to_json())
    assert set(data) == {"dim", "rays", "max_cones"}
