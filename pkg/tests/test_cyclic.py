from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from anglekit import ConcyclicDomain, Configuration, Degenerate, Mode, PiRational, census
from anglekit.catalog import ngon_center_census, ngon_census
from anglekit.cyclic import CENTER, CyclicPoint, base_angle, central_angle, inscribed_angle, triple_angle
from anglekit.errors import AllCollinear, BadParameter


def test_inscribed_angle_values():
    assert inscribed_angle(1, 0, 2, 5) == PiRational(1, 5)
    assert inscribed_angle(1, 0, 3, 5) == PiRational(2, 5)
    assert inscribed_angle(0, 1, 2, 5) == PiRational(3, 5)


def test_center_angles():
    assert central_angle(0, 1, 4) == PiRational(1, 2)
    assert central_angle(0, 2, 4) is Degenerate.Pi
    assert base_angle(0, 1, 4) == PiRational(1, 4)
    assert base_angle(0, 2, 4) is Degenerate.Zero


@given(st.integers(3, 40).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, n - 1), min_size=3, max_size=3, unique=True))))
def test_inscribed_triangle_sum(arg):
    n, (a, b, c) = arg
    total = inscribed_angle(b, a, c, n).value + inscribed_angle(a, b, c, n).value + inscribed_angle(a, c, b, n).value
    assert total == 1


@given(st.integers(3, 40).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))))
def test_center_triangle_sum(arg):
    n, (p, r) = arg
    c = central_angle(p, r, n)
    if c is Degenerate.Pi:
        assert base_angle(p, r, n) is Degenerate.Zero
        return
    P, R = CyclicPoint.vertex(p), CyclicPoint.vertex(r)
    total = c.value + triple_angle(CENTER, P, R, n).value + triple_angle(P, R, CENTER, n).value
    assert total == 1


@pytest.mark.parametrize("n", range(3, 25))
def test_regular_polygon_census(n):
    cfg = Configuration(ConcyclicDomain(n), [CyclicPoint.vertex(i) for i in range(n)])
    assert set(census(cfg).values) == set(ngon_census(n))
    cfg_c = Configuration(ConcyclicDomain(n), [CENTER] + [CyclicPoint.vertex(i) for i in range(n)])
    assert set(census(cfg_c).values) == set(ngon_center_census(n))


def test_census_matches_triple_enumeration():
    n = 9
    pts = [CENTER, CyclicPoint.vertex(0), CyclicPoint.vertex(2), CyclicPoint.vertex(3), CyclicPoint.vertex(7)]
    want = set()
    for j, b in enumerate(pts):
        for i, k in combinations(range(len(pts)), 2):
            if j in (i, k):
                continue
            v = triple_angle(pts[i], b, pts[k], n)
            if isinstance(v, PiRational):
                want.add(v)
    assert set(census(Configuration(ConcyclicDomain(n), pts)).values) == want


def test_include_zero_diameter():
    pts = [CENTER, CyclicPoint.vertex(0), CyclicPoint.vertex(2), CyclicPoint.vertex(1)]
    cfg = Configuration(ConcyclicDomain(4), pts)
    assert census(cfg, Mode.IncludeZero).count == census(cfg).count + 1


def test_collinear_diameter_rejected():
    with pytest.raises(AllCollinear):
        Configuration(ConcyclicDomain(4), [CENTER, CyclicPoint.vertex(0), CyclicPoint.vertex(2)])


def test_bad_n():
    with pytest.raises(BadParameter):
        ConcyclicDomain(2)
