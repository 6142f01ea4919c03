import json

import pytest

from anglekit import catalog, census
from anglekit.errors import AllCollinear, ConfigFormatError
from anglekit.io import (
    CONFIG_SCHEMA,
    REPORT_SCHEMA,
    census_to_dict,
    config_to_dict,
    dumps_config,
    dumps_report,
    load_config,
    loads_config,
    report,
    save_config,
)


@pytest.mark.parametrize("name", catalog.names())
def test_round_trip(name):
    entry = catalog.get(name)
    for cfg in filter(None, (entry.config, entry.decimal)):
        back = loads_config(dumps_config(cfg))
        assert back.points == cfg.points
        assert back.domain == cfg.domain
        assert back.declared_census == cfg.declared_census


def test_file_round_trip(tmp_path):
    cfg = catalog.get("pentagon").config
    path = tmp_path / "p.json"
    save_config(cfg, path)
    assert json.loads(path.read_text())["schema"] == CONFIG_SCHEMA
    assert load_config(path).points == cfg.points


def test_hand_written_configs():
    q = loads_config('{"schema": "anglekit-config/1", "domain": "quadratic", "points": [["0", "0"], ["1/2", "0"], ["0", "3"]]}')
    assert len(q) == 3
    c = loads_config('{"schema": "anglekit-config/1", "domain": "concyclic", "n": 4, "points": ["C", "V0", "V1"]}')
    assert census(c).count == 2


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"schema": "anglekit-config/9", "domain": "quadratic", "points": []}',
        '{"schema": "anglekit-config/1", "domain": "spherical", "points": []}',
        '{"schema": "anglekit-config/1", "domain": "concyclic", "n": 4, "points": ["C", "V0", "W1"]}',
        '{"schema": "anglekit-config/1", "domain": "numeric", "points": [["0", "x"], ["1", "0"], ["0", "1"]]}',
    ],
)
def test_bad_files(text):
    with pytest.raises(ConfigFormatError):
        loads_config(text)


def test_collinear_rejected_at_load():
    with pytest.raises(AllCollinear):
        loads_config('{"schema": "anglekit-config/1", "domain": "quadratic", "points": [["0","0"],["1","1"],["2","2"]]}')


def test_report_is_deterministic():
    rep = census(catalog.get("square_center").config)
    a = dumps_report(report("count", {"catalog": "square_center"}, census_to_dict(rep)))
    b = dumps_report(report("count", {"catalog": "square_center"}, census_to_dict(rep)))
    assert a == b
    d = json.loads(a)
    assert d["schema"] == REPORT_SCHEMA and d["command"] == "count"


def test_config_dict_shape():
    d = config_to_dict(catalog.get("square_center").config)
    assert d["domain"] == "quadratic"
    assert d["declared_census"] == ["1/4 pi", "1/2 pi"]
    assert d["points"][-1] == ["1/2", "1/2"]
