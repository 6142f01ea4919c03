from fractions import Fraction

import pytest

from anglekit import Certification, Configuration, Mode, NumericDomain, PiRational, catalog
from anglekit.census import census, cross_check
from anglekit.config import numeric_config
from anglekit.errors import TooFewPoints
from anglekit.numeric import NumericPoint, angle_interval, cluster_census, match_expected


def npts(*xy):
    return [NumericPoint(x, y) for x, y in xy]


def test_separated_angles_certify():
    rep = cluster_census(npts((0, 0), (3, 0), (0, 1)))
    assert rep.certification is Certification.CertifiedNumeric
    assert rep.count == 3
    assert rep.detail["precision_bits"] == 128


def test_tie_is_never_merged():
    # right isosceles: the two pi/4 angles are equal, so intervals overlap forever
    rep = cluster_census(npts((0, 0), (1, 0), (0, 1)), schedule=(128, 256))
    assert rep.certification is Certification.Unresolved
    assert rep.count == (2, 3)
    m = match_expected(rep, {PiRational(1, 4), PiRational(1, 2)})
    assert m and m.report.count == 2 and m.report.certification is Certification.CertifiedNumeric


def test_adversarial_leg_unresolved():
    leg = Fraction(1) + Fraction(1, 2**5000)
    rep = cluster_census(npts((0, 0), (leg, 0), (0, 1)))
    assert rep.certification is Certification.Unresolved
    assert rep.count == (2, 3)
    assert rep.detail["precision_bits"] == 4096
    # the two near-pi/4 balls still enclose pi/4, so matching succeeds:
    # certification is only as good as the exact values it is handed
    m = match_expected(rep, {PiRational(1, 4), PiRational(1, 2)})
    assert m.certified and m.report.count == 2


def test_wrong_expected_rejected():
    rep = cluster_census(npts((0, 0), (1, 0), (0, 1)), schedule=(128,))
    assert not match_expected(rep, {PiRational(1, 3), PiRational(1, 2)})


def test_decimal_points_enclosed():
    a = NumericPoint("0.1", "0")
    iv = angle_interval(NumericPoint("0", "0"), a, NumericPoint("0.1", "0.1"), 256)
    assert iv.ball.contains(PiRational(1, 2).to_arb()) or iv.contains(PiRational(1, 2).to_arb())


def test_include_zero_numeric():
    pts = npts((0, 0), (1, 0), (2, 0), (0, 1))
    rep = cluster_census(pts, Mode.IncludeZero, schedule=(128, 256))
    assert rep.values[0] == PiRational(0)


def test_declared_numeric_configuration():
    entry = catalog.get("fig3_fan_2a")
    rep = census(entry.decimal)
    assert rep.certification is Certification.CertifiedNumeric
    assert rep.count == 3


@pytest.mark.parametrize("name", ["pentagon", "square_center", "lb:3", "rhombus_1b"])
def test_numeric_view_of_exact_entries(name):
    cfg = catalog.get(name).config
    num = numeric_config(cfg)
    assert isinstance(num.domain, NumericDomain)
    assert census(num).count == census(cfg).count


def test_cross_check_agrees():
    cc = cross_check(catalog.get("square_center").config)
    assert cc.agree and cc.numeric.count == 2


def test_too_few_points():
    with pytest.raises(TooFewPoints):
        cluster_census(npts((0, 0), (1, 0)))
    with pytest.raises(TooFewPoints):
        Configuration(NumericDomain(), npts((0, 0), (1, 0)))
