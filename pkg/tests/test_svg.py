import xml.etree.ElementTree as ET

from anglekit import catalog
from anglekit.svg import render_svg

NS = "{http://www.w3.org/2000/svg}"


def test_points_drawn():
    svg = render_svg(catalog.get("square_center").config)
    root = ET.fromstring(svg)
    assert root.get("version") == "1.1"
    assert len(root.findall(f".//{NS}circle")) == 5


def test_annotation_per_distinct_angle():
    svg = render_svg(catalog.get("pentagon").config, annotate_angles=True)
    root = ET.fromstring(svg)
    labels = [t.text for t in root.iter(f"{NS}text") if t.text and "π" in t.text]
    assert sorted(labels) == ["2π/5", "3π/5", "π/5"]


def test_byte_deterministic():
    cfg = catalog.get("fig3_fan_2a").config
    assert render_svg(cfg, True) == render_svg(cfg, True)


def test_coordinates_inside_canvas():
    root = ET.fromstring(render_svg(catalog.get("lb:4").config))
    for c in root.findall(f".//{NS}circle"):
        assert 0 <= float(c.get("cx")) <= 600 and 0 <= float(c.get("cy")) <= 600
