import pytest

from chowseries.builtins import (
    from_spec,
    gen_blowup_pn,
    gen_hirzebruch,
    gen_pn,
    gen_product_pn_pm,
)
from chowseries.fan import enumerate_cones, is_cone_of_fan, minimal_non_faces, validate_fan


def test_pn():
    assert gen_pn(1).rays == ((1,), (-1,))
    p3 = gen_pn(3)
    assert len(p3.rays) == 4 and len(p3.max_cones) == 4
    assert p3.rays[3] == (-1, -1, -1)
    with pytest.raises(ValueError):
        gen_pn(0)


@pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)])
def test_product_counts(n, m):
    fan = gen_product_pn_pm(n, m)
    assert fan.nrays == n + m + 2
    assert len(fan.max_cones) == (n + 1) * (m + 1)
    assert validate_fan(fan).ok


def test_product_symmetry():
    a, b = gen_product_pn_pm(2, 1), gen_product_pn_pm(1, 2)
    assert [len(enumerate_cones(a, d)) for d in range(4)] == [len(enumerate_cones(b, d)) for d in range(4)]
    with pytest.raises(ValueError):
        gen_product_pn_pm(0, 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_blowup(n):
    fan = gen_blowup_pn(n)
    assert fan.nrays == n + 2
    assert fan.rays[n + 1] == (-1,) + (0,) * (n - 1)
    assert len(fan.max_cones) == 2 * n
    assert validate_fan(fan).ok
    assert not is_cone_of_fan(fan, {0, n + 1})
    assert tuple(range(1, n + 1)) not in fan.max_cones


def test_blowup_bad():
    with pytest.raises(ValueError):
        gen_blowup_pn(1)


@pytest.mark.parametrize("a", [1, 2, 3, 5])
def test_hirzebruch(a):
    fan = gen_hirzebruch(a)
    assert fan.rays == ((1, 0), (0, 1), (-1, a), (0, -1))
    assert len(fan.max_cones) == 4
    assert validate_fan(fan).ok
    assert minimal_non_faces(fan) == [(0, 2), (1, 3)]


def test_hirzebruch_bad():
    with pytest.raises(ValueError):
        gen_hirzebruch(0)


def test_from_spec():
    assert from_spec("pn 2") == gen_pn(2)
    assert from_spec("hirzebruch:3") == gen_hirzebruch(3)
    assert from_spec("product 2,1") == gen_product_pn_pm(2, 1)
    for bad in ["", "cube 2", "pn", "pn x", "product 1"]:
        with pytest.raises(ValueError):
            from_spec(bad)
