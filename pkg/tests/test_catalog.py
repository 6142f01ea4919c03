import time

import pytest

from anglekit import Certification, Mode, PiRational, census, catalog
from anglekit.catalog import FIG3_NAMES, bounds, conjectured, lower_bound_config, verify_entry
from anglekit.census import exact_values
from anglekit.errors import BadParameter, UnknownName

PENTA = {PiRational(1, 5), PiRational(2, 5), PiRational(3, 5)}


@pytest.mark.parametrize("name", catalog.names())
def test_entry_verifies(name):
    res = verify_entry(catalog.get(name))
    assert res.ok, res.message
    assert res.report.certification in (Certification.Exact, Certification.CertifiedNumeric)


def test_fig3_declarations():
    assert catalog.get("square_center").declared_census == {PiRational(1, 4), PiRational(1, 2)}
    for n in FIG3_NAMES[1:]:
        assert catalog.get(n).declared_census == PENTA
        assert len(catalog.get(n).config) == 5
    for n in FIG3_NAMES[2:]:
        twin = verify_entry(catalog.get(n)).twin
        assert twin.certification is Certification.CertifiedNumeric and twin.count == 3


def test_known_counts():
    assert census(catalog.get("equilateral").config).count == 1
    assert census(catalog.get("rectangle:3,1").config).count == 3
    assert census(catalog.get("rectangle:2,2").config).count == 2


def test_lower_bound_family():
    t = time.perf_counter()
    for k in range(1, 51):
        cfg = lower_bound_config(k)
        assert len(cfg) == 2 * k + 3
        assert census(cfg).count == 2 * k
    assert time.perf_counter() - t < 30


def test_bounds_table():
    assert bounds(1) == bounds(1).__class__(1, 3, 6, 3)
    assert (bounds(3).lower, bounds(3).upper, bounds(3).exact) == (5, 18, 5)
    assert (bounds(4).lower, bounds(4).upper, bounds(4).exact) == (7, 24, None)
    prev = 0
    for k in range(1, 101):
        b = bounds(k)
        assert k + 2 <= b.lower <= b.upper == 6 * k
        assert b.lower >= prev
        prev = b.lower
        if k % 2 == 0:
            assert b.lower >= k + 3
        if b.exact is not None:
            assert b.lower <= b.exact <= b.upper
        assert conjectured(k) >= b.lower


def test_zero_angle_corollaries():
    assert census(catalog.get("square").config, Mode.IncludeZero).count == 2
    low = [n for n in FIG3_NAMES if census(catalog.get(n).config, Mode.IncludeZero).count <= 3]
    assert sorted(low) == ["pentagon", "square_center"]


def test_lookup_errors():
    with pytest.raises(UnknownName):
        catalog.get("hexagram")
    for bad in ("lb:0", "ngon:2", "rectangle:1", "rectangle:0,1", "ngon:2.5"):
        with pytest.raises(BadParameter):
            catalog.get(bad)


def test_right_isosceles_extensions_square_center():
    vals = set(exact_values(census(catalog.get("right_isosceles").config)))
    assert vals == {PiRational(1, 4), PiRational(1, 2)}
