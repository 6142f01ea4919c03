from anglekit.search.probe import conjecture_probe
from anglekit.search.universe import parse_universes


def test_small_probe():
    rows = conjecture_probe(4, parse_universes("ngon_center:3..12"))
    assert [r.best for r in rows] == [3, 5, 5, 7]
    assert [r.exact for r in rows[:3]] == [3, 5, 5]
    for r in rows:
        assert r.within_bounds
        assert r.status == "consistent with conjecture"
        assert r.witness is not None


def test_probe_below_conjecture():
    rows = conjecture_probe(4, parse_universes("ngon:5"))
    assert rows[3].best < rows[3].conjectured
    assert rows[3].status == "below conjecture in these universes"
