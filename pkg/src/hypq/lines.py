"""Zig-zag lines and h-mid-point lines for odd q.

Both objects come from the same walk over the edge skeleton: follow an
edge to its far vertex, turn by h*2pi/q (edges around a vertex sit at
multiples of 2pi/q, and odd q makes h*2pi/q land on an edge again),
then continue along the new edge, alternating the turning sense at each
vertex.  The zig-zag line is the edge sequence itself; the h-mid-point
line is the sequence of edge mid-points, which all fall on one common
geodesic -- the collinearity that makes the odd-q sector boundaries
straight.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .disc import (
    Geodesic,
    base_tile,
    direction_toward,
    geodesic_through,
    hyp_midpoint,
    point_at,
    tile_metrics,
)
from .errors import UnsupportedCase
from .schlafli import SchlafliPair

Edge = tuple[complex, complex]


@dataclass(frozen=True)
class ZigzagPath:
    """Edges of the walk, each ordered in the direction of travel."""

    edges: tuple[Edge, ...]
    turn_angle: float


@dataclass(frozen=True)
class MidpointLine:
    """Mid-points of the walked edges and the geodesic they share."""

    midpoints: tuple[complex, ...]
    supporting: Geodesic

    def residuals(self) -> list[float]:
        return [abs(self.supporting.signed_distance(m)) for m in self.midpoints]


def _walk(pair: SchlafliPair, start_edge: Edge | None, steps: int) -> ZigzagPath:
    if pair.q % 2 == 0:
        raise UnsupportedCase(f"{pair}: these walks are defined for odd q")
    if steps < 0:
        raise ValueError("steps must be >= 0")
    if start_edge is None:
        tile = base_tile(pair)
        start_edge = tile.edge(0)
    theta = pair.h * 2.0 * math.pi / pair.q
    length = 2.0 * tile_metrics(pair).half_edge
    edges = [start_edge]
    sense = 1.0
    for _ in range(steps):
        tail, head = edges[-1]
        back = direction_toward(head, tail)
        out = back * cmath.exp(1j * sense * theta)
        edges.append((head, point_at(head, out, length)))
        sense = -sense
    return ZigzagPath(tuple(edges), theta)


def zigzag_line(
    pair: SchlafliPair, start_edge: Edge | None = None, steps: int = 0
) -> ZigzagPath:
    """The edge walk with alternating turns of h*2pi/q.

    The first turn is counter-clockwise; starting clockwise yields the
    mirror image of the same line.
    """
    return _walk(pair, start_edge, steps)


def h_midpoint_line(
    pair: SchlafliPair, start_edge: Edge | None = None, steps: int = 1
) -> MidpointLine:
    """Mid-points of the walked edges with their common geodesic.

    The supporting geodesic is taken through the first and last
    mid-point; the interior ones landing on it (residuals below the
    geometric tolerance) is the property the construction lives on.
    """
    if steps < 1:
        raise ValueError("need at least one step to define the supporting line")
    path = _walk(pair, start_edge, steps)
    mids = tuple(hyp_midpoint(*e) for e in path.edges)
    return MidpointLine(mids, geodesic_through(mids[0], mids[-1]))
