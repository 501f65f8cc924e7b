"""Sector boundaries for the splitting schemes, and region membership.

All sectors are wedges: the intersection of two half-planes whose
bounding geodesics meet at a single point.  For even q the wedge sits at
a tile vertex V and its rays run along the two edges of the head tile.
For odd q the rays run along h-mid-point lines instead:

* S0 has vertex V and is delimited by the rays rho_B and rho_C issued
  from the mid-points B and C of the head's two edges at V; rho_B is
  supported by the line through B and A, where A is the mid-point of
  the edge bisecting the outer angle at V, and rho_C is the rotated
  image of rho_B taking B to C.  Between B and C the boundary follows
  the head's edges into V (the corner patch), so of the head's vertices
  only the far endpoint of edge b falls outside; there sits a fan of
  h-1 tiles, each likewise poking just that one vertex out, which is
  why membership asks for at most one vertex outside.

* S0' is a wedge at an edge mid-point between the two h-mid-point
  lines crossing there.  The copy the first odd scheme splits off S0
  opens away from V at the mid-point C, one boundary sharing rho_C's
  line; it stays inside S0 and misses the head.  In the second odd
  scheme q head-bearing copies apexed at the outer mid-points A_k
  alternate with q such away-opening copies at the edge mid-points
  C_k, giving the 2q-fold cover.

Copies are indexed so that consecutive copies share a supporting line;
cover_closure_residual and ring_partition measure how exactly the
copies close up around the vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .disc import (
    GEOM_TOL,
    Geodesic,
    Tile,
    base_tile,
    direction_toward,
    geodesic_through,
    hyp_distance,
    hyp_midpoint,
    point_at,
    rotation,
    tile_metrics,
)
from .errors import SchemeParityMismatch, UnsupportedCase
from .schlafli import Region, SchlafliPair, Scheme


@dataclass(frozen=True)
class Ray:
    """Half of a geodesic: origin on the line plus the outgoing direction."""

    origin: complex
    direction: complex
    line: Geodesic


@dataclass(frozen=True)
class CornerPatch:
    """Near-vertex piece of a region headed by a tile at vertex V.

    Between the mid-points B and C the region boundary follows the
    head's two edges into V rather than the mid-point lines, so the head
    keeps its corner inside the region.  The patch is the dihedral at V
    between the two edge lines, clipped to 1.5 half-edges of V: wide
    enough to absorb the sliver the mid-point lines cut off, short of
    the edges' far endpoints, which lie outside the region.
    """

    vertex: complex
    lines: tuple[Geodesic, Geodesic]
    signs: tuple[float, float]
    radius: float

    def contains(self, z: complex, tol: float = GEOM_TOL) -> bool:
        if hyp_distance(self.vertex, z) > self.radius:
            return False
        return all(
            line.signed_distance(z) * sign >= -tol
            for line, sign in zip(self.lines, self.signs)
        )


@dataclass(frozen=True)
class SectorBoundary:
    """A wedge-shaped region: two rays bounding 1/q-th of the plane.

    Membership is decided against the full supporting lines, using the
    witness point to fix the inner side of each; for regions whose
    boundary runs along head edges near the vertex, the corner patch
    restores the sliver the supporting lines cut off.
    """

    pair: SchlafliPair
    scheme: Scheme
    kind: Region
    vertex: complex
    rays: tuple[Ray, Ray]
    witness: complex
    head_center: complex | None
    copy_index: int
    corner: CornerPatch | None = None

    def side_signs(self) -> tuple[float, float]:
        signs = []
        for ray in self.rays:
            s = ray.line.signed_distance(self.witness)
            if abs(s) < 10 * GEOM_TOL:
                raise AssertionError("witness too close to a boundary line")
            signs.append(math.copysign(1.0, s))
        return signs[0], signs[1]

    def contains(self, z: complex, tol: float = GEOM_TOL) -> bool:
        """True when z lies in the region; the boundary counts as inside."""
        in_wedge = all(
            ray.line.signed_distance(z) * sign >= -tol
            for ray, sign in zip(self.rays, self.side_signs())
        )
        if in_wedge:
            return True
        return self.corner is not None and self.corner.contains(z, tol)

    def clearance(self, z: complex) -> float:
        """Distance to the nearest boundary line (side-agnostic)."""
        return min(abs(ray.line.signed_distance(z)) for ray in self.rays)


def assign_region(tile: Tile, sector: SectorBoundary, tol: float = GEOM_TOL) -> bool:
    """Membership of a tile: at most one vertex strictly outside the sector."""
    outside = sum(1 for v in tile.vertices if not sector.contains(v, tol))
    return outside <= 1


def cover_size(pair: SchlafliPair, scheme: Scheme, kind: Region) -> int:
    """How many rotated copies close up around the vertex."""
    if scheme is Scheme.ODD_V2 and kind is Region.S0_PRIME:
        return 2 * pair.q
    return pair.q


def _check_scheme(pair: SchlafliPair, scheme: Scheme, kind: Region) -> None:
    even = pair.q % 2 == 0
    if scheme is Scheme.EVEN_Q and not even:
        raise SchemeParityMismatch(f"{pair}: {scheme.tag} needs even q")
    if scheme is not Scheme.EVEN_Q and even:
        raise SchemeParityMismatch(f"{pair}: {scheme.tag} needs odd q")
    if scheme is Scheme.ODD_LEGACY:
        raise UnsupportedCase(
            "legacy odd regions are bounded by zig-zag lines, not rays; "
            "render them via zigzag_line"
        )
    if scheme is not Scheme.EVEN_Q and pair.h < 2:
        raise UnsupportedCase(f"{pair}: mid-point rays need h >= 2")
    if kind is Region.S1:
        raise UnsupportedCase("S1 is the residual region, not a two-ray wedge")
    if scheme is Scheme.EVEN_Q and kind is not Region.S0:
        raise UnsupportedCase(f"{scheme.tag} defines only S0 wedges")
    if scheme is Scheme.ODD_V2 and kind is Region.S0:
        raise UnsupportedCase(f"{scheme.tag} splits the plane into S0' copies only")


@dataclass(frozen=True)
class _VertexFrame:
    """The named points of the construction at the base vertex V.

    V is the base tile vertex on the positive x-axis; c and b are the
    head's edges at V, counter-clockwise from c to b across the head.
    A is the mid-point of the outer-bisector edge at V, which points
    radially away from the origin.  step rotates clockwise around V by
    2pi/q, carrying b to c and A-labeled features to their neighbours.
    """

    pair: SchlafliPair
    vertex: complex
    b_mid: complex
    c_mid: complex
    a_mid: complex


def _frame(pair: SchlafliPair) -> _VertexFrame:
    tile = base_tile(pair)
    v = tile.vertices[0]
    c_mid = hyp_midpoint(v, tile.vertices[1])
    b_mid = hyp_midpoint(v, tile.vertices[-1])
    a_mid = point_at(v, 1.0 + 0j, tile_metrics(pair).half_edge)
    return _VertexFrame(pair, v, b_mid, c_mid, a_mid)


def _step(frame: _VertexFrame, k: int):
    """Clockwise rotation about V by k tile-steps."""
    return rotation(-2.0 * math.pi * k / frame.pair.q, about=frame.vertex)


def _ray_through(origin: complex, toward: complex) -> Ray:
    return Ray(origin, direction_toward(origin, toward), geodesic_through(origin, toward))


def _ray_away(origin: complex, away_from: complex) -> Ray:
    return Ray(
        origin, -direction_toward(origin, away_from), geodesic_through(origin, away_from)
    )


def _bisector_probe(pair: SchlafliPair, apex: complex, rays: tuple[Ray, Ray]) -> complex:
    """A point well inside a wedge, half an edge-half along its bisector."""
    d = rays[0].direction + rays[1].direction
    return point_at(apex, d / abs(d), 0.5 * tile_metrics(pair).half_edge)


def _corner_patch(pair: SchlafliPair, step, witness: complex) -> CornerPatch:
    """The head-corner dihedral at this copy's vertex.

    step carries the base-tile frame to the copy; the two lines support
    the head's edges at the vertex, with the inner side fixed by the
    head centre.
    """
    tile = base_tile(pair)
    v = step(tile.vertices[0])
    lines = (
        geodesic_through(v, step(tile.vertices[1])),
        geodesic_through(v, step(tile.vertices[-1])),
    )
    signs = tuple(
        math.copysign(1.0, line.signed_distance(witness)) for line in lines
    )
    return CornerPatch(v, lines, signs, 1.5 * tile_metrics(pair).half_edge)


def sector(
    pair: SchlafliPair, scheme: Scheme, kind: Region, copy_index: int = 0
) -> SectorBoundary:
    """One copy of the requested sector around the base vertex.

    copy_index walks clockwise around the vertex; consecutive indices
    share a supporting line.  For the OddV2 S0' cover, even indices are
    the copies apexed at the outer mid-points A_k and odd indices the
    in-between copies apexed at the edge mid-points C_k.
    """
    _check_scheme(pair, scheme, kind)
    n = cover_size(pair, scheme, kind)
    if not 0 <= copy_index < n:
        raise ValueError(f"copy_index must be in 0..{n - 1}")

    f = _frame(pair)
    tile = base_tile(pair)

    if scheme is Scheme.EVEN_Q:
        g = _step(f, copy_index)
        v1, vp = g(tile.vertices[1]), g(tile.vertices[-1])
        rays = (_ray_through(f.vertex, v1), _ray_through(f.vertex, vp))
        return SectorBoundary(
            pair, scheme, kind, f.vertex, rays, g(0j), g(0j), copy_index
        )

    if kind is Region.S0:
        g = _step(f, copy_index)
        a_next = _step(f, 1)(f.a_mid)
        rays = (
            _ray_away(g(f.b_mid), g(f.a_mid)),
            _ray_away(g(f.c_mid), g(a_next)),
        )
        return SectorBoundary(
            pair, scheme, kind, f.vertex, rays, g(0j), g(0j), copy_index,
            corner=_corner_patch(pair, g, g(0j)),
        )

    # S0' wedges: at an edge mid-point M, the two h-mid-point lines
    # through M cross; the two sectors there are the vertical pair of
    # wedges they cut out.  The copy headed by a tile opens toward the
    # vertex through its head; the in-between copy opens away from it.
    if scheme is Scheme.ODD_V1:
        # The piece S0 keeps after shedding its head and the fans: the
        # away-opening wedge at C.  Both rays run along the mid-point
        # lines through C, each away from the near mid-point A, so one
        # boundary shares rho_C's line.  The wedge sits inside S0 and
        # misses the head, which is what the splitting rule needs.
        return _away_wedge(pair, f, scheme, kind, copy_index, copy_index)
    turn, between = divmod(copy_index, 2)
    g = _step(f, turn)
    if not between:
        apex = g(f.a_mid)
        rays = (_ray_through(apex, g(f.b_mid)), _ray_through(apex, g(f.c_mid)))
        return SectorBoundary(
            pair, scheme, kind, apex, rays, g(0j), g(0j), copy_index,
            corner=_corner_patch(pair, g, g(0j)),
        )
    return _away_wedge(pair, f, scheme, kind, turn, copy_index)


def _away_wedge(
    pair: SchlafliPair,
    f: _VertexFrame,
    scheme: Scheme,
    kind: Region,
    turn: int,
    copy_index: int,
) -> SectorBoundary:
    """The head-less wedge at an edge mid-point C, opening away from V."""
    g = _step(f, turn)
    apex = g(f.c_mid)
    a_here = g(f.a_mid)
    a_next = g(_step(f, 1)(f.a_mid))
    rays = (_ray_away(apex, a_here), _ray_away(apex, a_next))
    return SectorBoundary(
        pair, scheme, kind, apex, rays, _bisector_probe(pair, apex, rays),
        None, copy_index,
    )


def cover(pair: SchlafliPair, scheme: Scheme, kind: Region) -> list[SectorBoundary]:
    """All copies of the sector that together tile around the vertex."""
    return [
        sector(pair, scheme, kind, k) for k in range(cover_size(pair, scheme, kind))
    ]


_ADVANCE = 0.5  # hyperbolic step used to probe a ray's heading


def _heading_residual(r1: Ray, r2: Ray) -> float:
    """How far r2 is from running along r1's line with the same heading.

    Infinite when the headings oppose; otherwise the worse of two probe
    distances from r1's supporting line.  The probes sit on r2, so the
    residual is symmetric enough for pairing purposes.
    """
    axis = r1.line.to_axis()
    ahead2 = point_at(r2.origin, r2.direction, _ADVANCE)
    delta2 = (axis(ahead2) - axis(r2.origin)).real
    delta1 = (axis(point_at(r1.origin, r1.direction, _ADVANCE)) - axis(r1.origin)).real
    if delta1 * delta2 <= 0:
        return math.inf
    return max(
        abs(r1.line.signed_distance(r2.origin)),
        abs(r1.line.signed_distance(ahead2)),
    )


def cover_closure_residual(sectors: list[SectorBoundary]) -> float:
    """Worst gap in the boundary pairing of a cover.

    In a cover that closes up around the vertex, every boundary ray runs
    along the supporting line of exactly one ray of another copy with
    the same heading (the shared wall between consecutive copies).  The
    result is the largest pairing gap, or infinity when some ray has no
    partner or an ambiguous one.
    """
    rays = [(s.copy_index, ray) for s in sectors for ray in s.rays]
    worst = 0.0
    for i, (owner, ray) in enumerate(rays):
        gaps = sorted(
            _heading_residual(ray, other)
            for j, (o, other) in enumerate(rays)
            if j != i and o != owner
        )
        if not gaps or math.isinf(gaps[0]):
            return math.inf
        if len(gaps) > 1 and gaps[1] < 1e-4:
            return math.inf  # wall shared by three copies: not a cover
        worst = max(worst, gaps[0])
    return worst


@dataclass(frozen=True)
class RingReport:
    """Point-sampling census of a cover on a circle around the vertex."""

    samples: int
    skipped: int
    min_hits: int
    max_hits: int
    uncovered: int

    @property
    def exact_partition(self) -> bool:
        return self.uncovered == 0 and self.min_hits == 1 and self.max_hits == 1


def ring_partition(
    sectors: list[SectorBoundary],
    center: complex,
    radius: float,
    samples: int = 720,
    skip_clearance: float = 1e-6,
) -> RingReport:
    """Sample a hyperbolic circle and count covering copies per sample.

    Samples too close to a boundary line are counted for coverage (with
    tolerance) but skipped for the exactly-once census.
    """
    skipped = 0
    uncovered = 0
    hits_lo, hits_hi = len(sectors), 0
    for i in range(samples):
        ang = 2.0 * math.pi * (i + 0.5) / samples
        z = point_at(center, complex(math.cos(ang), math.sin(ang)), radius)
        if not any(s.contains(z) for s in sectors):
            uncovered += 1
            continue
        if min(s.clearance(z) for s in sectors) < skip_clearance:
            skipped += 1
            continue
        strict = sum(1 for s in sectors if s.contains(z, tol=-skip_clearance))
        hits_lo = min(hits_lo, strict)
        hits_hi = max(hits_hi, strict)
    if hits_hi == 0:
        hits_lo = 0
    return RingReport(samples, skipped, hits_lo, hits_hi, uncovered)
