"""Numbering the vertices of the {5,4} grid with a Fibonacci tree.

The vertices of {5,4} are the cells of the dual {4,5}, so a numbering
of the vertices numbers the dual tiling.  The plane splits into the
central cell and five sectors, one per edge: the sector across an edge
is the quarter wedge delimited by that edge's full geodesic and the
line of the head tile's fifth side, both tile-edge lines (q = 4 makes
every edge line a geodesic of the edge skeleton).  Inside a sector the
tiles organize into a tree: white tiles carry three sons, black tiles
two, the leftmost son is always black, and the level counts run
1, 3, 8, 21, ... -- the same numbers the splitting tree produces.

Sides of a tile are numbered 1..5 counter-clockwise starting at the
side shared with the father.  Sons sit across sides 2,3,4 of a white
tile and 3,4 of a black one; side 5 (and side 2 of a black tile) faces
a neighbouring branch.  Each node marks one vertex of its own tile:

    white -> the junction of sides 1 and 2
    black -> the junction of sides 2 and 3

Walking the tree marks every vertex of the sector exactly once, except
the vertices lying on the right-hand delimiting ray (the side-5 line
through the apex, the sector's own vertex included): those belong to
the neighbouring sector's count.  ``check_bijection`` measures exactly
that on a finite tree.

Everything is written against the grid {p,4}; only p = 5 is exercised
by the tests, the rest of the family shares the construction with
p - 2 sons at white tiles and p - 3 at black ones.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum

from .disc import GEOM_TOL, Geodesic, Tile, geodesic_through
from .errors import InsufficientTessellationDepth, NoFatherEdge
from .schlafli import SchlafliPair, validate
from .tiling import Tessellation, tessellate


class Color(Enum):
    """Node species of the numbering tree."""

    BLACK = "black"
    WHITE = "white"


@dataclass(frozen=True)
class FibNode:
    """One node of the combinatorial tree.

    Ids are assigned level by level, left to right, starting at 1 for
    the root; children are listed left to right, the black son first.
    """

    id: int
    color: Color
    level: int
    parent: int | None
    children: tuple[int, ...] = ()


def _sons_of(color: Color, p: int) -> tuple[Color, ...]:
    count = (p - 2) if color is Color.WHITE else (p - 3)
    return (Color.BLACK,) + (Color.WHITE,) * (count - 1)


def fibonacci_tree(depth: int, p: int = 5) -> dict[int, FibNode]:
    """The bare tree through the given level, keyed by node id.

    The root is white.  For p = 5 the level sizes are 1, 3, 8, 21, ...,
    matching the region counts of the {5,4} splitting.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    nodes = {1: FibNode(1, Color.WHITE, 0, None)}
    current = [1]
    next_id = 2
    for level in range(1, depth + 1):
        upcoming: list[int] = []
        for pid in current:
            parent = nodes[pid]
            kids: list[int] = []
            for color in _sons_of(parent.color, p):
                nodes[next_id] = FibNode(next_id, color, level, pid)
                kids.append(next_id)
                upcoming.append(next_id)
                next_id += 1
            nodes[pid] = FibNode(
                pid, parent.color, parent.level, parent.parent, tuple(kids)
            )
        current = upcoming
    return nodes


def level_counts(nodes: dict[int, FibNode]) -> list[int]:
    counts: dict[int, int] = defaultdict(int)
    for n in nodes.values():
        counts[n.level] += 1
    return [counts[i] for i in range(len(counts))]


# ----------------------------------------------------------------------
# Geometric attachment


def _orientation(tile: Tile) -> int:
    """+1 when the stored vertex list runs counter-clockwise."""
    area = 0.0
    vs = tile.vertices
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        area += a.real * b.imag - a.imag * b.real
    return 1 if area > 0 else -1


def side_numbering(tile: Tile, father_edge: int | None) -> tuple[int, ...]:
    """Edge index of each side 1..p, counter-clockwise from the father.

    The walk follows the geometric orientation rather than the list
    order, so tiles whose vertices happen to be stored clockwise are
    numbered the same way as everyone else.
    """
    if father_edge is None:
        raise NoFatherEdge("the central cell has no father side")
    step = _orientation(tile)
    return tuple((father_edge + step * k) % tile.p for k in range(tile.p))


def _junction(tile: Tile, edge_a: int, edge_b: int) -> complex:
    ia = {edge_a, (edge_a + 1) % tile.p}
    ib = {edge_b, (edge_b + 1) % tile.p}
    (shared,) = ia & ib
    return tile.vertices[shared]


def assign_vertex(tile: Tile, father_edge: int, color: Color) -> complex:
    """The vertex this node numbers: junction of sides 1,2 for white
    nodes, of sides 2,3 for black ones."""
    sides = side_numbering(tile, father_edge)
    if color is Color.WHITE:
        return _junction(tile, sides[0], sides[1])
    return _junction(tile, sides[1], sides[2])


@dataclass(frozen=True)
class SectorNode:
    """A tree node attached to its tile."""

    node: FibNode
    tile: Tile
    father_edge: int

    @property
    def vertex(self) -> complex:
        return assign_vertex(self.tile, self.father_edge, self.node.color)


@dataclass
class SectorTree:
    """The numbered sector: tree nodes bound to grid tiles.

    ``left`` is the delimiting line through the shared edge of the
    central cell and the head; ``right`` the head's side-5 line through
    the apex.  Vertices on the right line are the excluded ones.
    """

    pair: SchlafliPair
    tessellation: Tessellation
    central: Tile
    apex: complex
    left: Geodesic
    right: Geodesic
    nodes: dict[int, SectorNode] = field(default_factory=dict)

    def levels(self) -> list[list[int]]:
        out: dict[int, list[int]] = defaultdict(list)
        for nid in sorted(self.nodes):
            out[self.nodes[nid].node.level].append(nid)
        return [out[i] for i in range(len(out))]


def _son_slots(color: Color, p: int) -> range:
    # white: sides 2..p-1, black: sides 3..p-1 (1-based side numbers)
    return range(2, p) if color is Color.WHITE else range(3, p)


def pentagrid_sector(depth: int, p: int = 5) -> SectorTree:
    """Build the sector across edge 0 of the central cell of {p,4}.

    The tessellation is taken two generations deeper than the tree so
    that every neighbour needed for slot lookups and for the coverage
    audit is present.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    pair = validate(p, 4)
    tess = tessellate(pair, depth + 2)
    central = tess.tiles[0]
    head = tess.neighbor_across(central, 0)
    if head is None:
        raise InsufficientTessellationDepth("no head tile at depth 0")

    father_edge = None
    want = {tess.vertex_id(v) for v in central.edge(0)}
    for i in range(head.p):
        got = {tess.vertex_id(v) for v in head.edge(i)}
        if got == want:
            father_edge = i
    assert father_edge is not None

    sides = side_numbering(head, father_edge)
    left = geodesic_through(*central.edge(0))
    right = head.edge_geodesic(sides[p - 1])
    apex = _junction(head, sides[p - 1], sides[0])

    tree = fibonacci_tree(depth, p)
    sector = SectorTree(pair, tess, central, apex, left, right)
    sector.nodes[1] = SectorNode(tree[1], head, father_edge)

    for nid in sorted(tree):
        fib = tree[nid]
        if not fib.children:
            continue
        here = sector.nodes[nid]
        slots = _son_slots(fib.color, p)
        sides = side_numbering(here.tile, here.father_edge)
        for slot, child_id in zip(slots, fib.children):
            edge = sides[slot - 1]
            son = sector.tessellation.neighbor_across(here.tile, edge)
            if son is None:
                raise InsufficientTessellationDepth(
                    f"missing son of node {nid} at level {fib.level}"
                )
            back = None
            for i in range(son.p):
                nb = sector.tessellation.neighbor_across(son, i)
                if nb is not None and nb.id == here.tile.id:
                    back = i
            assert back is not None
            sector.nodes[child_id] = SectorNode(tree[child_id], son, back)
    return sector


# ----------------------------------------------------------------------
# Coverage audit


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of the vertex-coverage audit of one finite sector tree.

    covered: quantized vertex -> node id that numbered it
    missed: vertices some of whose surrounding tiles lie beyond the
            explored levels (a deeper tree would number them)
    doubly_assigned: vertices numbered more than once (must be empty)
    excluded: fully surrounded yet unnumbered vertices; these are the
            ones the construction leaves to the neighbouring sector
            and they must sit on the right-hand delimiting ray
    """

    covered: dict[tuple[float, float], int]
    missed: list[tuple[float, float]]
    doubly_assigned: list[tuple[float, float]]
    excluded: list[tuple[float, float]]
    apex: tuple[float, float]
    right_ray_residual: float


def _key(z: complex) -> tuple[float, float]:
    return (round(z.real, 6), round(z.imag, 6))


def check_bijection(depth: int, p: int = 5, tol: float = 1e-9) -> BijectionReport:
    """Audit the numbering of one sector explored to the given depth.

    Membership of a tile in the sector is a sign test against the two
    delimiting lines (tiles never straddle them).  A vertex counts as
    fully explored when every member tile touching it is in the tree;
    only those can be judged covered or excluded, the rest are missed.
    """
    sector = pentagrid_sector(depth, p)
    tess = sector.tessellation
    head = sector.nodes[1].tile
    s_left = 1.0 if sector.left.signed_distance(head.center) > 0 else -1.0
    s_right = 1.0 if sector.right.signed_distance(head.center) > 0 else -1.0

    def member(tile: Tile) -> bool:
        return (
            s_left * sector.left.signed_distance(tile.center) > GEOM_TOL
            and s_right * sector.right.signed_distance(tile.center) > GEOM_TOL
        )

    member_ids = {t.id for t in tess.tiles if member(t)}
    explored = {sn.tile.id for sn in sector.nodes.values()}

    assignments: dict[int, list[int]] = defaultdict(list)
    for nid, sn in sector.nodes.items():
        vid = tess.vertex_id(sn.vertex)
        assert vid is not None
        assignments[vid].append(nid)

    touching: dict[int, set[int]] = defaultdict(set)
    for tid in member_ids:
        tile = tess.tiles[tid]
        for v in tile.vertices:
            touching[tess.vertex_id(v)].add(tid)

    groups = tess.vertex_groups()
    covered: dict[tuple[float, float], int] = {}
    missed: list[tuple[float, float]] = []
    doubly: list[tuple[float, float]] = []
    excluded: list[tuple[float, float]] = []
    worst = 0.0
    for vid, tids in sorted(touching.items()):
        z = groups[vid][0]
        key = _key(z)
        owners = assignments.get(vid, [])
        if len(owners) > 1:
            doubly.append(key)
            continue
        if len(owners) == 1:
            covered[key] = owners[0]
            continue
        if tids <= explored:
            excluded.append(key)
            worst = max(worst, abs(sector.right.signed_distance(z)))
        else:
            missed.append(key)
    return BijectionReport(
        covered, missed, doubly, excluded, _key(sector.apex), worst
    )


# ----------------------------------------------------------------------
# Rendering


def dual_scene(depth: int = 3, p: int = 5) -> dict:
    """Scene showing the numbered sector: tiles shaded by color, node
    ids printed at their assigned vertices, delimiting lines in full."""
    sector = pentagrid_sector(depth, p)
    tiles = [{"points": [[v.real, v.imag] for v in sector.central.vertices]}]
    labels = []
    for nid in sorted(sector.nodes):
        sn = sector.nodes[nid]
        entry = {"points": [[v.real, v.imag] for v in sn.tile.vertices]}
        if sn.node.color is Color.BLACK:
            entry["fill"] = "#d9d9d9"
        tiles.append(entry)
        z = sn.vertex
        labels.append({"at": [z.real, z.imag], "text": str(nid)})
    geodesics = []
    for line in (sector.left, sector.right):
        e1, e2 = line.ideal_endpoints()
        geodesics.append({"a": [e1.real, e1.imag], "b": [e2.real, e2.imag]})
    return {
        "tiles": tiles,
        "geodesics": geodesics,
        "sectors": [],
        "labels": labels,
    }
