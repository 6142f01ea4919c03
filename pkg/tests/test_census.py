import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anglekit import (
    Certification,
    ConcyclicDomain,
    Configuration,
    Mode,
    NumericDomain,
    PiRational,
    Point,
    QuadraticDomain,
    angle_set_subset,
    catalog,
    census,
)
from anglekit.census import declared_matches, exact_values
from anglekit.cyclic import CENTER, CyclicPoint
from anglekit.errors import AllCollinear, CoincidentPoints, NotASubset
from anglekit.numeric import NumericPoint

from _gen import random_exact_config


def q(*xy):
    return Configuration(QuadraticDomain(), [Point(x, y) for x, y in xy])


def test_pi_never_counts():
    # three collinear points plus one off the line: pi appears at the middle point
    cfg = q((0, 0), (1, 0), (2, 0), (1, 1))
    vals = exact_values(census(cfg))
    assert PiRational(1) not in vals
    assert all(0 < v.value < 1 for v in vals)


def test_square_modes():
    sq = catalog.get("square").config
    assert census(sq).count == 2
    assert census(sq, Mode.IncludeZero).count == 2  # no three collinear points
    sc = catalog.get("square_center").config
    assert census(sc, Mode.IncludeZero).count == 3
    assert exact_values(census(sc, Mode.IncludeZero))[0] == PiRational(0)


def test_witnesses_reproduce_values():
    cfg = catalog.get("square_center").config
    rep = census(cfg)
    for v, (i, j, k) in zip(rep.values, rep.witnesses):
        w = census(cfg.subset([i, j, k]))
        assert v.canonical() in {x.canonical() for x in w.values}


def test_declared_matches():
    cfg = catalog.get("pentagon").config
    assert declared_matches(cfg, census(cfg))
    bad = Configuration(cfg.domain, cfg.points, declared_census={PiRational(1, 5)})
    assert not declared_matches(bad, census(bad))


def test_load_errors():
    with pytest.raises(AllCollinear):
        q((0, 0), (1, 1), (3, 3))
    with pytest.raises(CoincidentPoints):
        q((0, 0), (1, 0), (1, 0), (0, 1))


def test_subset_domain_mismatch():
    a = catalog.get("square").config
    b = catalog.get("pentagon").config
    with pytest.raises(NotASubset):
        angle_set_subset(a, b)
    with pytest.raises(NotASubset):
        angle_set_subset(q((0, 0), (5, 0), (0, 5)), a)


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_include_zero_delta(seed):
    cfg = random_exact_config(random.Random(seed))
    d = census(cfg, Mode.IncludeZero).count - census(cfg).count
    assert d in (0, 1)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_subset_monotonicity(seed):
    rng = random.Random(seed)
    cfg = random_exact_config(rng)
    n = len(cfg)
    for size in range(3, n):
        idx = rng.sample(range(n), size)
        try:
            sub = cfg.subset(idx)
        except AllCollinear:
            continue
        assert angle_set_subset(sub, cfg)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(3, 16), data=st.data())
def test_cyclic_monotonicity_and_rotation(n, data):
    verts = data.draw(st.lists(st.integers(0, n - 1), min_size=3, max_size=n, unique=True))
    center = data.draw(st.booleans())
    shift = data.draw(st.integers(0, n - 1))
    pts = ([CENTER] if center else []) + [CyclicPoint.vertex(v) for v in verts]
    try:
        cfg = Configuration(ConcyclicDomain(n), pts)
    except AllCollinear:
        return
    rot = Configuration(ConcyclicDomain(n), ([CENTER] if center else []) + [CyclicPoint.vertex((v + shift) % n) for v in verts])
    assert census(rot).values == census(cfg).values
    full = Configuration(ConcyclicDomain(n), [CENTER] + [CyclicPoint.vertex(i) for i in range(n)])
    assert angle_set_subset(cfg, full)
    # every value is a multiple of pi/(2n); without the center, of pi/n
    for v in census(cfg).values:
        assert (v.value * (2 * n)).denominator == 1
        if not center:
            assert (v.value * n).denominator == 1


def test_numeric_subset():
    big = Configuration(NumericDomain(), [NumericPoint(x, y) for x, y in [(0, 0), (3, 0), (0, 1), (3, 1)]])
    small = big.subset([0, 1, 2])
    assert angle_set_subset(small, big)


def test_exact_census_certification():
    assert census(q((0, 0), (1, 0), (0, 1))).certification is Certification.Exact
