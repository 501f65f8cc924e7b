"""SVG output: document shape, determinism, and arc geometry fidelity."""

import math
import re
from xml.dom import minidom

import pytest

from hypq.disc import geodesic_through
from hypq.dual import dual_scene
from hypq.render import (
    midlines_scene,
    render_svg,
    sector_scene,
    tessellation_scene,
    zigzag_scene,
)
from hypq.schlafli import Scheme, validate


def test_empty_scene_is_a_valid_document():
    svg = render_svg({})
    assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>')
    assert svg.rstrip().endswith("</svg>")
    assert '<circle cx="0" cy="0" r="1"' in svg  # the disc border
    assert "<g" not in svg  # no empty groups
    minidom.parseString(svg)


def test_style_overrides():
    svg = render_svg({}, style={"size": 250, "disc_stroke": "#ff0000"})
    assert 'width="250" height="250"' in svg
    assert 'stroke="#ff0000"' in svg


ALL_SCENES = [
    tessellation_scene(validate(5, 4), 2),
    tessellation_scene(validate(4, 5), 2),
    sector_scene(validate(5, 4), Scheme.EVEN_Q, 2),
    sector_scene(validate(5, 7), Scheme.ODD_V1, 2),
    sector_scene(validate(5, 7), Scheme.ODD_V2, 2),
    midlines_scene(validate(4, 5), 2),
    zigzag_scene(validate(5, 7), 2),
    dual_scene(2),
]


@pytest.mark.parametrize("scene", ALL_SCENES, ids=range(len(ALL_SCENES)))
def test_scenes_render_well_formed(scene):
    svg = render_svg(scene)
    minidom.parseString(svg)
    assert "-0.000000" not in svg
    # every stroke coordinate stays inside the viewBox square
    for x, y in re.findall(r'[ML] (-?\d+\.\d+) (-?\d+\.\d+)', svg):
        assert abs(float(x)) <= 1.05 and abs(float(y)) <= 1.05


def test_rendering_is_deterministic():
    for build in (
        lambda: tessellation_scene(validate(5, 4), 2),
        lambda: sector_scene(validate(5, 7), Scheme.ODD_V1, 2),
        lambda: dual_scene(2),
    ):
        assert render_svg(build()) == render_svg(build())


def test_scene_dicts_are_json_serializable():
    import json

    for scene in ALL_SCENES:
        json.dumps(scene)


def test_labels_are_escaped():
    svg = render_svg({"labels": [{"at": [0, 0], "text": "<&>"}]})
    assert "&lt;&amp;&gt;" in svg
    assert "<&>" not in svg


def test_sector_scene_marks_the_copies():
    scene = sector_scene(validate(5, 7), Scheme.ODD_V1, 2)
    assert len(scene["sectors"]) == 7
    labels = {item["text"] for item in scene["labels"]}
    assert labels == {str(k) for k in range(7)}
    scene2 = sector_scene(validate(5, 7), Scheme.ODD_V2, 2)
    assert len(scene2["sectors"]) == 14


def test_tessellation_scene_tile_counts():
    from hypq.tiling import tessellate

    scene = tessellation_scene(validate(5, 4), 2)
    assert len(scene["tiles"]) == len(tessellate(validate(5, 4), 2)) == 21
    for tile in scene["tiles"]:
        assert len(tile["points"]) == 5


_ARC = re.compile(
    r"(-?\d+\.\d+) (-?\d+\.\d+) A (\d+\.\d+) \d+\.\d+ 0 0 ([01]) "
    r"(-?\d+\.\d+) (-?\d+\.\d+)"
)


def _recover_center(x1, y1, r, sweep, x2, y2):
    """Arc-endpoint to center conversion for equal radii, no rotation.

    Straight from the implementation notes of the SVG spec (F.6.5),
    with large-arc always 0 here.
    """
    mx, my = (x1 - x2) / 2, (y1 - y2) / 2
    d2 = mx * mx + my * my
    s2 = max(0.0, (r * r - d2) / d2)
    sign = 1.0 if sweep == 1 else -1.0  # + when large-arc differs from sweep
    cxp = sign * math.sqrt(s2) * my
    cyp = -sign * math.sqrt(s2) * mx
    return cxp + (x1 + x2) / 2, cyp + (y1 + y2) / 2


def test_arc_commands_encode_the_right_circles():
    # decode every emitted arc and recover its center; it must match the
    # geodesic through the two endpoints (in math coordinates, so the
    # y-flip is undone first)
    svg = render_svg(tessellation_scene(validate(5, 4), 2))
    arcs = _ARC.findall(svg)
    assert len(arcs) > 30
    for x1, y1, r, sweep, x2, y2 in arcs:
        x1, y1, r, x2, y2 = map(float, (x1, y1, r, x2, y2))
        cx, cy = _recover_center(x1, y1, r, int(sweep), x2, y2)
        a = complex(x1, -y1)
        b = complex(x2, -y2)
        geo = geodesic_through(a, b)
        assert abs(complex(cx, -cy) - geo.center) < 1e-4, (a, b)
        # endpoints are rounded to 6 decimals, which perturbs the
        # recomputed circle more for flatter arcs
        assert abs(r - geo.radius) < 1e-4 * max(1.0, geo.radius)


def test_midline_scene_has_ideal_geodesics():
    scene = midlines_scene(validate(4, 5), 2)
    assert scene["geodesics"]
    for item in scene["geodesics"]:
        for key in ("a", "b"):
            x, y = item[key]
            assert abs(math.hypot(x, y) - 1.0) < 1e-9  # ideal endpoints
