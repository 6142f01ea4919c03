from fractions import Fraction

import pytest

from anglekit import Point, QuadraticDomain, Configuration, catalog, census
from anglekit.errors import BadParameter, BaseCensusExceedsK
from anglekit.search.extend import GridUniverse, extend_search, is_similar_to

ADDABLE = {(-1, 0), (0, -1), (Fraction(1, 2), Fraction(1, 2)), (1, 1)}


@pytest.fixture(scope="module")
def right_isosceles():
    return extend_search(catalog.get("right_isosceles").config, 2)


def test_right_isosceles_points(right_isosceles):
    got = {(p.point.x.a, p.point.y.a) for p in right_isosceles.certified_points}
    assert got == {(Fraction(x), Fraction(y)) for x, y in ADDABLE}
    assert not right_isosceles.uncertified


def test_right_isosceles_compatibility(right_isosceles):
    assert right_isosceles.max_compatible_size == 2
    sc = catalog.get("square_center").config
    assert right_isosceles.maximal_configs
    for cfg in right_isosceles.maximal_configs:
        assert len(cfg) == 5 and is_similar_to(cfg, sc)


def test_each_point_recounts(right_isosceles):
    base = catalog.get("right_isosceles").config
    for c in right_isosceles.certified_points:
        cfg = Configuration(QuadraticDomain(c.field), list(base.points) + [c.point])
        assert census(cfg).count <= 2


def test_equilateral_has_none():
    assert extend_search(catalog.get("equilateral").config, 2).certified_points == []


def test_rhombus_has_none():
    assert extend_search(catalog.get("rhombus_1b").config, 3).certified_points == []


def test_pentagon_minus_vertex():
    res = extend_search(catalog.get("pentagon_minus_vertex_1c").config, 3)
    assert len(res.certified_points) == 3
    assert res.max_compatible_size == 1
    assert all(not nbrs for nbrs in res.compatibility.values())


def test_errors():
    with pytest.raises(BaseCensusExceedsK):
        extend_search(catalog.get("pentagon").config, 2)
    with pytest.raises(BadParameter):
        extend_search(catalog.get("equilateral").config, 0)


def test_thread_count_irrelevant():
    base = catalog.get("right_isosceles").config
    u = GridUniverse(divisions=80)
    a = extend_search(base, 2, u, threads=1)
    b = extend_search(base, 2, u, threads=4)
    assert [p.point for p in a.certified_points] == [p.point for p in b.certified_points]
