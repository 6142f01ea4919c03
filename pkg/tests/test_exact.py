import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anglekit import (
    Configuration,
    Degenerate,
    PiRational,
    Point,
    QuadraticDomain,
    QuadraticField,
    Scalar,
    angle_key,
    apply_similarity,
    census,
    key_compare,
    orientation,
)
from anglekit.config import EXACT_NGONS, ngon_vertices_exact, to_float
from anglekit.errors import BadParameter, CoincidentPoints
from anglekit.exact import Orientation, pythagorean_rotation, squared_distance

from _gen import random_exact_config

SQ3 = QuadraticField(3)


def test_right_angle_and_degenerates():
    k = angle_key(Point(1, 0), Point(0, 0), Point(0, 1))
    assert k.pi_rational() == PiRational(1, 2)
    assert angle_key(Point(1, 0), Point(0, 0), Point(2, 0)) is Degenerate.Zero
    assert angle_key(Point(1, 0), Point(0, 0), Point(-2, 0)) is Degenerate.Pi
    with pytest.raises(CoincidentPoints):
        angle_key(Point(0, 0), Point(0, 0), Point(1, 1))


def test_key_order_matches_float():
    a = angle_key(Point(1, 0), Point(0, 0), Point(1, 1))
    b = angle_key(Point(1, 0), Point(0, 0), Point(1, 2))
    assert key_compare(a, b) < 0 and float(a) < float(b)
    assert math.isclose(float(a), math.pi / 4)


def test_orientation():
    assert orientation(Point(0, 0), Point(1, 0), Point(0, 1)) is Orientation.CCW
    assert orientation(Point(0, 0), Point(0, 1), Point(1, 0)) is Orientation.CW
    assert orientation(Point(0, 0), Point(1, 1), Point(2, 2)) is Orientation.Collinear


def test_sqrt3_angles():
    apex = Point(Fraction(1, 2), Fraction(0))
    top = Point(Fraction(1, 2), Scalar(0, Fraction(1, 2), 3))
    k = angle_key(Point(0, 0), Point(1, 0), top, SQ3)
    assert k.pi_rational() == PiRational(1, 3)
    assert angle_key(Point(0, 0), apex, top, SQ3).pi_rational() == PiRational(1, 2)


@pytest.mark.parametrize("n", EXACT_NGONS)
def test_exact_ngon_vertices(n):
    fld, pts = ngon_vertices_exact(n)
    cfg = Configuration(QuadraticDomain(fld), pts)
    for (x, y), j in zip(to_float(cfg), range(n)):
        assert math.isclose(x, math.cos(2 * math.pi * j / n), abs_tol=1e-12)
        assert math.isclose(y, math.sin(2 * math.pi * j / n), abs_tol=1e-12)
    rep = census(cfg)
    want = {PiRational(m, n) for m in range(1, n - 1)}
    assert set(rep.pi_values()) == want
    # equal sides, exactly
    sides = {squared_distance(pts[i], pts[(i + 1) % n], fld) for i in range(n)}
    assert len(sides) == 1


@settings(max_examples=60, deadline=None)
@given(
    seed=st.integers(0, 10**6),
    m=st.integers(0, 5),
    n=st.integers(1, 5),
    scale=st.fractions(min_value=Fraction(1, 5), max_value=7, max_denominator=9),
    reflect=st.booleans(),
)
def test_similarity_invariance(seed, m, n, scale, reflect):
    cfg = random_exact_config(random.Random(seed), 6)
    rot = pythagorean_rotation(m, n)
    img = apply_similarity(cfg, rot, scale, Point(Fraction(3, 7), -2), reflect)
    a, b = census(cfg), census(img)
    assert a.count == b.count
    assert [float(v) for v in a.values] == pytest.approx([float(v) for v in b.values], abs=1e-12)


def test_similarity_rejects_bad_rotation():
    cfg = Configuration(QuadraticDomain(), [Point(0, 0), Point(1, 0), Point(0, 1)])
    with pytest.raises(BadParameter):
        apply_similarity(cfg, (1, 1))
