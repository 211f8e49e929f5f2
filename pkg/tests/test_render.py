import math
import xml.etree.ElementTree as ET

import pytest

from eisequable.eisenstein import EisensteinInt, to_cartesian
from eisequable.render import MARGIN, SCALE, render_svg, write_svg

NS = {"svg": "http://www.w3.org/2000/svg"}
SQRT3 = math.sqrt(3)


def expected_world_points():
    # figure layout: scalene at the origin, equilateral shifted right by 5
    scalene = [to_cartesian(EisensteinInt(*p)) for p in ((6, 3), (8, 16), (0, 0))]
    equilateral = [(x + 5, y) for x, y in (to_cartesian(EisensteinInt(*p)) for p in ((8, 4), (4, 8), (0, 0)))]
    return {"scalene": scalene, "equilateral": equilateral}


def inverse_transform(points):
    pts = [p for tri in points.values() for p in tri]
    x0 = min(p[0] for p in pts) - MARGIN
    y1 = max(p[1] for p in pts) + MARGIN
    return lambda sx, sy: (sx / SCALE + x0, y1 - sy / SCALE)


def polygons(svg_text):
    root = ET.fromstring(svg_text)
    out = {}
    for poly in root.iter("{http://www.w3.org/2000/svg}polygon"):
        coords = [tuple(float(c) for c in pair.split(",")) for pair in poly.get("points").split()]
        out[poly.get("id")] = coords
    return root, out


def test_world_points_match_figure():
    pts = expected_world_points()
    assert pts["scalene"][0] == pytest.approx((4.5, 1.5 * SQRT3))
    assert pts["scalene"][1] == pytest.approx((0.0, 8 * SQRT3))
    assert pts["equilateral"][0] == pytest.approx((11.0, 2 * SQRT3))
    assert pts["equilateral"][1] == pytest.approx((5.0, 4 * SQRT3))


def test_default_render_structure():
    root, polys = polygons(render_svg())
    assert root.get("version") == "1.1"
    assert len(polys) == 2
    assert len(root.findall(".//svg:circle", NS)) > 50


def test_no_grid_has_only_polygons():
    root, polys = polygons(render_svg(grid=False))
    assert len(polys) == 2
    assert root.findall(".//svg:circle", NS) == []
    assert root.findall(".//svg:line", NS) == []


def test_polygon_coordinates_recover_theorem_vertices():
    expected = expected_world_points()
    back = inverse_transform(expected)
    _, polys = polygons(render_svg())
    for name, pts in expected.items():
        got = [back(sx, sy) for sx, sy in polys[name]]
        for (gx, gy), (ex, ey) in zip(got, pts):
            assert abs(gx - ex) < 1e-6 and abs(gy - ey) < 1e-6


def test_viewbox_from_content_bounds():
    root, _ = polygons(render_svg())
    vb = [float(v) for v in root.get("viewBox").split()]
    assert vb[:2] == [0.0, 0.0]
    assert vb[2] == pytest.approx(SCALE * (11 - 0 + 2), abs=1e-6)
    assert vb[3] == pytest.approx(SCALE * (8 * SQRT3 + 2), abs=1e-6)


def test_grid_dots_are_lattice_points():
    root, polys = polygons(render_svg(coefficient_range=30))
    back = inverse_transform(expected_world_points())
    dots = root.findall(".//svg:circle", NS)
    for dot in dots:
        x, y = back(float(dot.get("cx")), float(dot.get("cy")))
        cw = y / (SQRT3 / 2)
        assert abs(cw - round(cw)) < 1e-5
        c1 = x + round(cw) / 2
        assert abs(c1 - round(c1)) < 1e-5
    # all 6 vertices are lattice points inside the view, so they carry dots
    centres = {(round(float(d.get("cx")), 3), round(float(d.get("cy")), 3)) for d in dots}
    for pts in polys.values():
        for sx, sy in pts:
            assert (round(sx, 3), round(sy, 3)) in centres


def test_grid_range_is_configurable():
    few = ET.fromstring(render_svg(coefficient_range=2)).findall(".//svg:circle", NS)
    many = ET.fromstring(render_svg(coefficient_range=24)).findall(".//svg:circle", NS)
    assert 0 < len(few) < len(many)
    with pytest.raises(ValueError):
        render_svg(coefficient_range=-1)


def test_render_is_deterministic(tmp_path):
    a = write_svg(tmp_path / "a.svg").read_bytes()
    b = write_svg(tmp_path / "b.svg").read_bytes()
    assert a == b
