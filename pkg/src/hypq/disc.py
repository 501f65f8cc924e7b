"""Poincare-disc primitives: points, geodesics, isometries, tiles.

Points are complex numbers strictly inside the unit circle.  Geodesics
are diameters or arcs of circles orthogonal to the unit circle; the
orthogonality condition |center|^2 = radius^2 + 1 is kept exact by
construction.  Isometries are Mobius maps z -> (az+b)/(cz+d), composed
with conjugation first when the anti flag is set (reflections are
anti-maps).  The model is conformal, so angles at a point are plain
Euclidean angles between tangent directions.

Everything here is desk-scale double precision; the package-wide
geometric tolerance is GEOM_TOL and accumulated error is kept well
below it by the involution/isometry tests.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .schlafli import SchlafliPair

#: Tolerance for geometric identities (angles, collinearity, closures).
GEOM_TOL = 1e-9


def hyp_distance(u: complex, v: complex) -> float:
    """Hyperbolic distance between two points of the open disc."""
    du = 1.0 - abs(u) ** 2
    dv = 1.0 - abs(v) ** 2
    x = 1.0 + 2.0 * abs(u - v) ** 2 / (du * dv)
    return math.acosh(max(1.0, x))


@dataclass(frozen=True)
class TileMetrics:
    """Hyperbolic lengths of the right triangle spanned by a tile:
    center to vertex, center to edge midpoint, edge midpoint to vertex."""

    circumradius: float
    inradius: float
    half_edge: float


def tile_metrics(pair: SchlafliPair) -> TileMetrics:
    """Right-triangle trigonometry of the {p,q} cell.

    The triangle center / edge-midpoint / vertex has angles pi/p, pi/2,
    pi/q; each leg's cosh is cos of the opposite angle over sin of the
    adjacent one, and the hyperbolic Pythagoras identity ties the three
    sides together (verified in tests).  The assignment of the two legs
    is pinned by measurement: half the constructed edge of {5,7} is
    1.2062..., not 0.9624....
    """
    ap = math.pi / pair.p
    aq = math.pi / pair.q
    circum = math.acosh(1.0 / (math.tan(ap) * math.tan(aq)))
    inr = math.acosh(math.cos(aq) / math.sin(ap))
    half_edge = math.acosh(math.cos(ap) / math.sin(aq))
    return TileMetrics(circum, inr, half_edge)


# ---------------------------------------------------------------------------
# Isometries


@dataclass(frozen=True)
class Isometry:
    """z -> (a w + b)/(c w + d) with w = conj(z) if anti else z."""

    a: complex
    b: complex
    c: complex
    d: complex
    anti: bool = False

    def __call__(self, z: complex) -> complex:
        w = z.conjugate() if self.anti else z
        return (self.a * w + self.b) / (self.c * w + self.d)

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other: (self.compose(other))(z) = self(other(z))."""
        if self.anti:
            oa, ob, oc, od = (
                other.a.conjugate(),
                other.b.conjugate(),
                other.c.conjugate(),
                other.d.conjugate(),
            )
        else:
            oa, ob, oc, od = other.a, other.b, other.c, other.d
        return Isometry(
            self.a * oa + self.b * oc,
            self.a * ob + self.b * od,
            self.c * oa + self.d * oc,
            self.c * ob + self.d * od,
            self.anti != other.anti,
        )

    def inverse(self) -> "Isometry":
        a, b, c, d = self.d, -self.b, -self.c, self.a
        if self.anti:
            a, b, c, d = (
                a.conjugate(),
                b.conjugate(),
                c.conjugate(),
                d.conjugate(),
            )
        return Isometry(a, b, c, d, self.anti)


IDENTITY = Isometry(1, 0, 0, 1)


def rotation(angle: float, about: complex = 0j) -> Isometry:
    rot = Isometry(cmath.exp(1j * angle), 0, 0, 1)
    if about == 0:
        return rot
    t = translate_to(about)
    return t.compose(rot).compose(t.inverse())


def translate_to(v: complex) -> Isometry:
    """The hyperbolic translation moving the origin to v.

    Its derivative at the origin is a positive real, so tangent
    directions at the origin reappear unrotated at v.
    """
    return Isometry(1, v, v.conjugate(), 1)


def point_at(v: complex, direction: complex, dist: float) -> complex:
    """The point at hyperbolic distance dist from v along a unit tangent
    direction given in the conformal chart at v."""
    u = direction / abs(direction)
    return translate_to(v)(math.tanh(dist / 2.0) * u)


def direction_toward(v: complex, w: complex) -> complex:
    """Unit tangent direction at v pointing toward w."""
    d = translate_to(v).inverse()(w)
    return d / abs(d)


def angle_at(v: complex, a: complex, b: complex) -> float:
    """Angle of the triangle corner at v between the sides toward a and b."""
    da = direction_toward(v, a)
    db = direction_toward(v, b)
    return abs(cmath.phase(db / da))


def hyp_midpoint(u: complex, v: complex) -> complex:
    """The hyperbolic midpoint of the segment uv."""
    back = translate_to(u)
    w = back.inverse()(v)
    if w == 0:
        return u
    half = math.tanh(math.atanh(abs(w)) / 2.0)
    return back(half * w / abs(w))


# ---------------------------------------------------------------------------
# Geodesics


@dataclass(frozen=True)
class Geodesic:
    """A full hyperbolic line.

    Diameter: center is None and direction is a unit complex number (the
    line is the set t*direction).  Arc: the circle |z - center| = radius
    with |center|^2 = radius^2 + 1, direction unused.
    """

    center: complex | None
    radius: float
    direction: complex

    @staticmethod
    def diameter(direction: complex) -> "Geodesic":
        return Geodesic(None, 0.0, direction / abs(direction))

    @staticmethod
    def arc(center: complex) -> "Geodesic":
        mod2 = abs(center) ** 2
        if mod2 <= 1.0:
            raise ValueError("arc center must lie outside the unit circle")
        return Geodesic(center, math.sqrt(mod2 - 1.0), 0j)

    @property
    def is_diameter(self) -> bool:
        return self.center is None

    def to_axis(self) -> Isometry:
        """An isometry carrying this geodesic onto the real diameter."""
        if self.center is None:
            return Isometry(self.direction.conjugate(), 0, 0, 1)
        # move the point of the arc nearest the origin to the origin;
        # there the arc's tangent is perpendicular to the center direction
        u = self.center / abs(self.center)
        foot = u * (abs(self.center) - self.radius)
        t = translate_to(foot).inverse()
        tangent = 1j * u
        return Isometry(tangent.conjugate(), 0, 0, 1).compose(t)

    def signed_distance(self, z: complex) -> float:
        """Hyperbolic distance to the line, signed by side."""
        w = self.to_axis()(z)
        return math.asinh(2.0 * w.imag / (1.0 - abs(w) ** 2))

    def contains(self, z: complex, tol: float = GEOM_TOL) -> bool:
        return abs(self.signed_distance(z)) < tol

    def reflection(self) -> Isometry:
        if self.center is None:
            return Isometry(self.direction**2, 0, 0, 1, anti=True)
        c = self.center
        return Isometry(c, self.radius**2 - abs(c) ** 2, 1, -c.conjugate(), anti=True)

    def ideal_endpoints(self) -> tuple[complex, complex]:
        """The two boundary points of the line, as unit complex numbers."""
        if self.center is None:
            return self.direction, -self.direction
        phi = cmath.phase(self.center)
        spread = math.acos(1.0 / abs(self.center))
        return cmath.exp(1j * (phi - spread)), cmath.exp(1j * (phi + spread))


def geodesic_through(z1: complex, z2: complex) -> Geodesic:
    """The unique geodesic through two distinct points.

    Solves 2 Re(conj(z) c) = |z|^2 + 1 for the arc center; a vanishing
    determinant means the points are collinear with the origin and the
    line is a diameter.
    """
    if z1 == z2:
        raise ValueError("two distinct points are needed")
    det = z1.real * z2.imag - z1.imag * z2.real
    if abs(det) < 1e-13:
        return Geodesic.diameter(z2 - z1)
    r1 = (abs(z1) ** 2 + 1.0) / 2.0
    r2 = (abs(z2) ** 2 + 1.0) / 2.0
    cx = (r1 * z2.imag - r2 * z1.imag) / det
    cy = (r2 * z1.real - r1 * z2.real) / det
    return Geodesic.arc(complex(cx, cy))


# ---------------------------------------------------------------------------
# Tiles


@dataclass(frozen=True)
class Tile:
    """A cell of the tessellation; vertices counter-clockwise.

    The hyperbolic center rides along through reflections, which gives a
    stable dedup key without recomputing centroids.  Edge i joins
    vertices i and i+1; a reflected tile is built so that its edge 0 is
    the shared edge with its parent.
    """

    id: int
    vertices: tuple[complex, ...]
    center: complex
    generation: int
    parent: int | None = None
    parent_edge: int | None = None

    @property
    def p(self) -> int:
        return len(self.vertices)

    def edge(self, i: int) -> tuple[complex, complex]:
        return self.vertices[i], self.vertices[(i + 1) % self.p]

    def edge_geodesic(self, i: int) -> Geodesic:
        return geodesic_through(*self.edge(i))

    def edge_midpoint(self, i: int) -> complex:
        return hyp_midpoint(*self.edge(i))

    def interior_angle(self, k: int) -> float:
        v = self.vertices[k]
        return angle_at(v, self.vertices[k - 1], self.vertices[(k + 1) % self.p])


def base_tile(pair: SchlafliPair) -> Tile:
    """The cell centered at the origin with a vertex on the positive x-axis."""
    rad = math.tanh(tile_metrics(pair).circumradius / 2.0)
    verts = tuple(
        rad * cmath.exp(2j * math.pi * k / pair.p) for k in range(pair.p)
    )
    return Tile(id=0, vertices=verts, center=0j, generation=0)


def reflect_tile(tile: Tile, edge_index: int, new_id: int) -> Tile:
    """Mirror image of a tile across one of its edges.

    The image's vertex list starts at the shared edge and runs
    counter-clockwise (a reflection reverses orientation, so the
    original order is walked backwards).
    """
    p = tile.p
    mirror = tile.edge_geodesic(edge_index).reflection()
    images = [mirror(v) for v in tile.vertices]
    order = [(edge_index + 1 - j) % p for j in range(p)]
    return Tile(
        id=new_id,
        vertices=tuple(images[k] for k in order),
        center=mirror(tile.center),
        generation=tile.generation + 1,
        parent=tile.id,
        parent_edge=edge_index,
    )
