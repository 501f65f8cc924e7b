"""Poincare-disc renderings as standalone SVG documents.

A scene is plain data: a dict with the four keys ``tiles``,
``geodesics``, ``sectors`` and ``labels`` (each a list, all optional),
point coordinates as [x, y] pairs.  The command line passes scenes
through JSON unchanged, so everything here must stay serializable.
Builders at the bottom of the module produce scenes from the geometric
objects; ``render_svg`` only turns a scene into text.

Geodesic segments become single circular-arc path commands: the circle
through two disc points orthogonal to the unit circle is recovered with
``geodesic_through`` and the arc is always the minor one.  The output
is deterministic: fixed 6-decimal coordinates, items emitted in input
order, no dependence on anything outside the scene and style dicts.
The vertical axis is flipped on emission so the mathematical
orientation (counter-clockwise positive) is preserved on screen.
"""

from __future__ import annotations

import cmath
import math
from xml.sax.saxutils import escape

from .disc import Tile, geodesic_through, point_at
from .lines import h_midpoint_line, zigzag_line
from .schlafli import Region, SchlafliPair, Scheme
from .sectors import Ray, SectorBoundary, cover
from .tiling import tessellate

#: Style knobs understood by render_svg; callers may override any subset.
DEFAULT_STYLE = {
    "size": 600,
    "disc_stroke": "#202020",
    "tile_stroke": "#3a3a3a",
    "tile_fill": "none",
    "geodesic_stroke": "#2c6fb3",
    "sector_stroke": "#c0392b",
    "label_color": "#111111",
    "stroke_width": 0.004,
    "accent_width": 0.007,
    "label_size": 0.06,
    "dot_radius": 0.012,
}

_VIEWBOX = "-1.05 -1.05 2.1 2.1"

# Endpoints closer than this are dropped rather than drawn as a
# zero-length arc, which some viewers reject.
_DEGENERATE = 1e-9


def _fmt(x: float) -> str:
    out = f"{x:.6f}"
    return "0.000000" if out == "-0.000000" else out


def _xy(z: complex) -> str:
    # User space is y-down; flipping here keeps the math orientation.
    return f"{_fmt(z.real)} {_fmt(-z.imag)}"


def _as_complex(pt) -> complex:
    return complex(pt[0], pt[1])


def _arc_command(a: complex, b: complex) -> str:
    """The path command from a to b along their common geodesic."""
    try:
        geo = geodesic_through(a, b)
    except ValueError:
        # Both endpoints hug the boundary and the center solve loses all
        # precision; at that scale the chord is indistinguishable.
        return f"L {_xy(b)}"
    if geo.center is None:
        return f"L {_xy(b)}"
    cross = ((a - geo.center).conjugate() * (b - geo.center)).imag
    # Positive cross = counter-clockwise about the center in math
    # coordinates, which the y-flip turns into SVG sweep 0.
    sweep = 0 if cross > 0 else 1
    r = _fmt(geo.radius)
    return f"A {r} {r} 0 0 {sweep} {_xy(b)}"


def _segment_path(a: complex, b: complex) -> str | None:
    if abs(a - b) < _DEGENERATE:
        return None
    return f"M {_xy(a)} {_arc_command(a, b)}"


def _polygon_path(points: list[complex]) -> str | None:
    if len(points) < 2:
        return None
    parts = [f"M {_xy(points[0])}"]
    for i in range(len(points)):
        a = points[i]
        b = points[(i + 1) % len(points)]
        if abs(a - b) < _DEGENERATE:
            continue
        parts.append(_arc_command(a, b))
    parts.append("Z")
    return " ".join(parts)


def render_svg(scene: dict, style: dict | None = None) -> str:
    """Serialize a scene dict to an SVG 1.1 document.

    The unit disc maps to a square viewBox with a small margin; an
    empty scene still yields a valid document showing the disc border.
    Identical scene and style dicts produce byte-identical output.
    """
    st = dict(DEFAULT_STYLE)
    if style:
        st.update(style)
    size = int(st["size"])
    w = _fmt(float(st["stroke_width"]))
    aw = _fmt(float(st["accent_width"]))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="{_VIEWBOX}">',
        f'<circle cx="0" cy="0" r="1" fill="none" '
        f'stroke="{st["disc_stroke"]}" stroke-width="{w}"/>',
    ]

    tiles = scene.get("tiles") or []
    if tiles:
        out.append('<g class="tiles">')
        for item in tiles:
            pts = [_as_complex(p) for p in item["points"]]
            d = _polygon_path(pts)
            if d is None:
                continue
            fill = item.get("fill", st["tile_fill"])
            out.append(
                f'<path d="{d}" fill="{fill}" stroke="{st["tile_stroke"]}" '
                f'stroke-width="{w}"/>'
            )
        out.append("</g>")

    geodesics = scene.get("geodesics") or []
    if geodesics:
        out.append('<g class="geodesics">')
        for item in geodesics:
            d = _segment_path(_as_complex(item["a"]), _as_complex(item["b"]))
            if d is None:
                continue
            out.append(
                f'<path d="{d}" fill="none" stroke="{st["geodesic_stroke"]}" '
                f'stroke-width="{aw}"/>'
            )
        out.append("</g>")

    sectors = scene.get("sectors") or []
    if sectors:
        out.append('<g class="sectors">')
        for item in sectors:
            for arc in item.get("arcs", []):
                d = _segment_path(_as_complex(arc["a"]), _as_complex(arc["b"]))
                if d is None:
                    continue
                out.append(
                    f'<path d="{d}" fill="none" '
                    f'stroke="{st["sector_stroke"]}" stroke-width="{aw}"/>'
                )
            v = _as_complex(item["vertex"])
            out.append(
                f'<circle cx="{_fmt(v.real)}" cy="{_fmt(-v.imag)}" '
                f'r="{_fmt(float(st["dot_radius"]))}" '
                f'fill="{st["sector_stroke"]}"/>'
            )
        out.append("</g>")

    labels = scene.get("labels") or []
    if labels:
        fs = _fmt(float(st["label_size"]))
        out.append('<g class="labels">')
        for item in labels:
            at = _as_complex(item["at"])
            text = escape(str(item["text"]))
            out.append(
                f'<text x="{_fmt(at.real)}" y="{_fmt(-at.imag)}" '
                f'font-size="{fs}" text-anchor="middle" '
                f'dominant-baseline="middle" '
                f'fill="{st["label_color"]}">{text}</text>'
            )
        out.append("</g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------
# Scene builders


def _pt(z: complex) -> list[float]:
    return [z.real, z.imag]


def _tile_entry(tile: Tile) -> dict:
    return {"points": [_pt(v) for v in tile.vertices]}


def _ray_to_ideal(ray: Ray) -> complex:
    """The ideal endpoint the ray runs into."""
    line = ray.line
    e1, e2 = line.ideal_endpoints()
    if line.center is None:
        d = ray.direction
        return e1 if (d.conjugate() * e1).real > 0 else e2
    # Moving from the origin in the ray direction sweeps the angle
    # about the arc center monotonically; follow that sense.
    rel = ray.origin - line.center
    sense = (rel.conjugate() * ray.direction).imag
    a0 = cmath.phase(rel)

    def ahead(e: complex) -> float:
        d = cmath.phase(e - line.center) - a0
        d = (d + math.pi) % (2.0 * math.pi) - math.pi
        return d * sense

    return e1 if ahead(e1) > 0 else e2


def _sector_entry(sb: SectorBoundary) -> dict:
    arcs = [
        {"a": _pt(r.origin), "b": _pt(_ray_to_ideal(r))} for r in sb.rays
    ]
    return {"vertex": _pt(sb.vertex), "arcs": arcs}


def tessellation_scene(pair: SchlafliPair, generations: int = 3) -> dict:
    """All tiles of the reflection closure, nothing else."""
    tess = tessellate(pair, generations)
    return {
        "tiles": [_tile_entry(t) for t in tess.tiles],
        "geodesics": [],
        "sectors": [],
        "labels": [],
    }


def sector_scene(
    pair: SchlafliPair, scheme: Scheme, generations: int = 3
) -> dict:
    """Tessellation with the scheme's sector cover drawn on top.

    The even scheme and the first odd scheme show the q head-bearing
    sectors; the second odd scheme shows its 2q-sector cover.  Each
    apex is marked and numbered by copy index.
    """
    kind = Region.S0_PRIME if scheme is Scheme.ODD_V2 else Region.S0
    scene = tessellation_scene(pair, generations)
    boundaries = cover(pair, scheme, kind)
    scene["sectors"] = [_sector_entry(sb) for sb in boundaries]
    scene["labels"] = [
        {"at": _pt(sb.witness), "text": str(sb.copy_index)}
        for sb in boundaries
    ]
    return scene


def midlines_scene(
    pair: SchlafliPair, generations: int = 3, steps: int = 4
) -> dict:
    """Tessellation with one mid-point line per base-tile edge.

    Each line is drawn in full, ideal point to ideal point, the walked
    mid-points marked as labels.
    """
    tess = tessellate(pair, generations)
    scene = {
        "tiles": [_tile_entry(t) for t in tess.tiles],
        "geodesics": [],
        "sectors": [],
        "labels": [],
    }
    base = tess.tiles[0]
    for i in range(base.p):
        ml = h_midpoint_line(pair, base.edge(i), steps=steps)
        e1, e2 = ml.supporting.ideal_endpoints()
        scene["geodesics"].append({"a": _pt(e1), "b": _pt(e2)})
        scene["labels"].extend(
            {"at": _pt(m), "text": "."} for m in ml.midpoints
        )
    return scene


def zigzag_scene(
    pair: SchlafliPair, generations: int = 3, steps: int = 8
) -> dict:
    """Tessellation with one zig-zag edge walk drawn on top."""
    tess = tessellate(pair, generations)
    path = zigzag_line(pair, steps=steps)
    return {
        "tiles": [_tile_entry(t) for t in tess.tiles],
        "geodesics": [
            {"a": _pt(a), "b": _pt(b)} for a, b in path.edges
        ],
        "sectors": [],
        "labels": [],
    }
