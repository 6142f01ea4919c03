import json

import pytest

from anglekit.cli import main
from anglekit.io import dumps_config
from anglekit import catalog


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--catalog", "pentagon")
    assert code == 0 and "3 distinct angles" in out and "π/5" in out


def test_count_include_zero(capsys):
    code, out, _ = run(capsys, "count", "--catalog", "square_center", "--include-zero")
    assert code == 0 and out.startswith("3 distinct angles")


def test_count_json(capsys, tmp_path):
    out_path = tmp_path / "r.json"
    assert run(capsys, "count", "--catalog", "lb:3", "--json", str(out_path))[0] == 0
    rep = json.loads(out_path.read_text())
    assert rep["schema"] == "anglekit-report/1" and rep["result"]["count"] == 6


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--catalog", "all")
    assert code == 0
    assert "equilateral" in out and "FAIL" not in out


def test_verify_tampered(capsys, tmp_path):
    d = json.loads(dumps_config(catalog.get("pentagon").config))
    d["declared_census"] = ["1/5 pi", "2/5 pi"]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(d))
    code, out, _ = run(capsys, "verify", "--config", str(p))
    assert code == 1


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--k", "3")
    assert code == 0 and "5" in out and "18" in out
    code, out, _ = run(capsys, "bounds", "--range", "1..3", "--table")
    assert code == 0 and len(out.strip().splitlines()) >= 4
    assert run(capsys, "bounds", "--k", "0")[0] == 1


def test_render(capsys, tmp_path):
    p = tmp_path / "a.svg"
    assert run(capsys, "render", "--catalog", "square_center", "--annotate-angles", "-o", str(p))[0] == 0
    first = p.read_bytes()
    run(capsys, "render", "--catalog", "square_center", "--annotate-angles", "-o", str(p))
    assert p.read_bytes() == first and first.startswith(b"<?xml")


def test_search_subset(capsys):
    code, out, _ = run(capsys, "search", "subset", "--universe", "ngon_center:4", "--k", "2")
    assert code == 0 and "5" in out


def test_search_extend(capsys):
    code, out, _ = run(capsys, "search", "extend", "--base", "right_isosceles", "--k", "2")
    assert code == 0 and "4" in out


def test_search_falsify(capsys, tmp_path):
    p = tmp_path / "f.json"
    code, out, _ = run(capsys, "search", "falsify", "--trials", "20", "--seed", "7", "--json", str(p))
    assert code == 0
    rep = json.loads(p.read_text())
    assert rep["seed"] == 7 and rep["result"]["counterexamples"] == []


def test_search_probe(capsys):
    code, out, _ = run(capsys, "search", "probe", "--kmax", "3", "--universe", "ngon_center:3..8")
    assert code == 0 and "consistent with conjecture" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--catalog", "nope"],
        ["count", "--config", "/nonexistent.json"],
        ["search", "subset", "--universe", "ngon:2", "--k", "2"],
        ["search", "extend", "--base", "pentagon", "--k", "2"],
    ],
)
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


def test_collinear_config(capsys, tmp_path):
    p = tmp_path / "c.json"
    p.write_text('{"schema": "anglekit-config/1", "domain": "quadratic", "points": [["0","0"],["1","1"],["2","2"]]}')
    code, _, err = run(capsys, "count", "--config", str(p))
    assert code == 1 and "collinear" in err


def test_unresolved_exit_code(capsys, tmp_path):
    p = tmp_path / "u.json"
    leg = "1." + "0" * 2000 + "1"
    p.write_text(json.dumps({"schema": "anglekit-config/1", "domain": "numeric", "points": [["0", "0"], [leg, "0"], ["0", "1"]]}))
    code, out, _ = run(capsys, "count", "--config", str(p))
    assert code == 2 and "2..3" in out
