"""Exact planar primitives over rational coordinates.

All coordinates are `fractions.Fraction`; every predicate is decided by the
sign of an exact determinant, so no floating point enters any decision
anywhere downstream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import (
    CollinearTriple,
    NotSimple,
    TooFewVertices,
    ValidationError,
)

RationalLike = Union[int, str, Fraction]


def as_fraction(v: RationalLike) -> Fraction:
    """Exact conversion: ints, Fractions, and strings like "3/7" or "2.25".

    Floats are refused; decimal inputs must arrive as strings to stay exact.
    """
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"need int/str/Fraction, got {type(v).__name__}")


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x: RationalLike, y: RationalLike) -> "Point":
        return Point(as_fraction(x), as_fraction(y))


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of det(b-a, c-a): +1 left turn, 0 collinear, -1 right turn."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def cross(a: Point, b: Point, c: Point) -> Fraction:
    """det(b-a, c-a), twice the signed area of triangle abc."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def triangle_area(a: Point, b: Point, c: Point) -> Fraction:
    return abs(cross(a, b, c)) / 2


def point_on_closed_segment(p: Point, a: Point, b: Point) -> bool:
    if orient(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def point_on_open_segment(p: Point, a: Point, b: Point) -> bool:
    return point_on_closed_segment(p, a, b) and p != a and p != b


def segments_properly_cross(p: Point, q: Point, r: Point, s: Point) -> bool:
    """True iff the open segments pq and rs cross transversally."""
    o1 = orient(p, q, r)
    o2 = orient(p, q, s)
    o3 = orient(r, s, p)
    o4 = orient(r, s, q)
    return o1 * o2 < 0 and o3 * o4 < 0


def open_segments_intersect(p: Point, q: Point, r: Point, s: Point) -> bool:
    """True iff the open segments share at least one point.

    Exact and total: handles the collinear-overlap case; a T-contact at an
    endpoint does not count because the endpoint is missing from its own
    open segment.
    """
    if segments_properly_cross(p, q, r, s):
        return True
    if orient(p, q, r) == 0 and orient(p, q, s) == 0:
        # collinear: compare open intervals along the dominant axis
        if p.x != q.x:
            lo1, hi1 = sorted((p.x, q.x))
            lo2, hi2 = sorted((r.x, s.x))
        else:
            lo1, hi1 = sorted((p.y, q.y))
            lo2, hi2 = sorted((r.y, s.y))
        return max(lo1, lo2) < min(hi1, hi2)
    # non-collinear, not properly crossing: at most a single contact point
    # which is an endpoint of one of them, hence not in that open segment
    return False


def _point_in_cycle(p: Point, cycle: Sequence[Point]) -> int:
    """-1 outside / 0 on boundary / +1 strictly inside a simple closed cycle."""
    n = len(cycle)
    for k in range(n):
        a, b = cycle[k], cycle[(k + 1) % n]
        if point_on_closed_segment(p, a, b):
            return 0
    inside = False
    for k in range(n):
        a, b = cycle[k], cycle[(k + 1) % n]
        if (a.y <= p.y < b.y) or (b.y <= p.y < a.y):
            x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if x_int > p.x:
                inside = not inside
    return 1 if inside else -1


def shoelace(cycle: Sequence[Point]) -> Fraction:
    """Signed area, positive for counterclockwise cycles."""
    total = Fraction(0)
    n = len(cycle)
    for k in range(n):
        a, b = cycle[k], cycle[(k + 1) % n]
        total += a.x * b.y - b.x * a.y
    return total / 2


@dataclass(frozen=True)
class Polygon:
    """Simple polygon, counterclockwise, with labels attached to its points.

    ``vertices[k]`` carries label ``labels[k]``; labels are 1..n and survive
    orientation normalization (a clockwise input is stored reversed, so the
    label sequence along the boundary becomes 1, n, n-1, ...).
    """

    vertices: tuple[Point, ...]
    labels: tuple[int, ...]
    degenerate: bool = False

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def h(self) -> int:
        return 0

    @cached_property
    def _index(self) -> dict[int, int]:
        return {lab: k for k, lab in enumerate(self.labels)}

    def point(self, label: int) -> Point:
        return self.vertices[self._index[label]]

    @cached_property
    def coords(self) -> tuple[Point, ...]:
        """Points indexed by label-1 (input order), not boundary order."""
        out = [None] * self.n
        for k, lab in enumerate(self.labels):
            out[lab - 1] = self.vertices[k]
        return tuple(out)  # type: ignore[arg-type]

    @cached_property
    def loops(self) -> tuple[tuple[int, ...], ...]:
        return (self.labels,)

    def neighbors(self, label: int) -> tuple[int, int]:
        """Boundary-order (previous, next) labels around ``label``."""
        k = self._index[label]
        return self.labels[k - 1], self.labels[(k + 1) % self.n]

    @cached_property
    def boundary_edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for k in range(self.n):
            i, j = self.labels[k], self.labels[(k + 1) % self.n]
            out.add((min(i, j), max(i, j)))
        return frozenset(out)

    @cached_property
    def area(self) -> Fraction:
        return shoelace(self.vertices)

    def contains(self, p: Point) -> int:
        """-1 outside / 0 on boundary / +1 strictly inside."""
        return _point_in_cycle(p, self.vertices)

    @cached_property
    def is_convex(self) -> bool:
        return not reflex_vertices(self)

    def with_vertex(self, label: int, target: Point) -> "Polygon":
        """Same labels with one point replaced; no validation performed."""
        k = self._index[label]
        verts = list(self.vertices)
        verts[k] = target
        return Polygon(tuple(verts), self.labels, self.degenerate)

    def to_json_obj(self) -> dict:
        from .jsonio import fraction_to_json
        return {"vertices": [[fraction_to_json(p.x), fraction_to_json(p.y)]
                             for p in self.coords]}


def _check_general_position(points: Sequence[Point]) -> None:
    for a, b, c in itertools.combinations(points, 3):
        if orient(a, b, c) == 0:
            raise CollinearTriple(f"collinear triple {a}, {b}, {c}")


def _check_simple_cycle(pts: Sequence[Point]) -> None:
    n = len(pts)
    if len(set(pts)) != n:
        raise NotSimple("duplicate vertices")
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            c, d = pts[j], pts[(j + 1) % n]
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            if adjacent:
                continue
            if segments_properly_cross(a, b, c, d):
                raise NotSimple(f"edges {i + 1}-{i + 2} and {j + 1}-{j + 2} cross")
        # a vertex sitting on a non-incident edge is only possible for
        # degenerate (collinear) inputs, which we may have allowed
        for k in range(n):
            if k == i or k == (i + 1) % n:
                continue
            if point_on_closed_segment(pts[k], a, b):
                raise NotSimple(f"vertex {k + 1} lies on edge {i + 1}-{i + 2}")


def validate_polygon(vertices: Iterable, *, allow_degenerate: bool = False) -> Polygon:
    """Normalize a vertex list into a counterclockwise Polygon.

    Rejections: TooFewVertices, NotSimple (crossing or touching boundary),
    CollinearTriple (general position violated; pass allow_degenerate=True to
    accept and mark the polygon degenerate instead).
    """
    pts = []
    for v in vertices:
        if isinstance(v, Point):
            pts.append(v)
        else:
            x, y = v
            pts.append(Point.of(x, y))
    n = len(pts)
    if n < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {n}")
    if len(set(pts)) != n:
        raise NotSimple("duplicate vertices")
    degenerate = False
    try:
        _check_general_position(pts)
    except CollinearTriple:
        if not allow_degenerate:
            raise
        degenerate = True
    _check_simple_cycle(pts)
    labels = tuple(range(1, n + 1))
    area = shoelace(pts)
    if area == 0:
        raise NotSimple("zero-area boundary")
    if area < 0:
        pts = [pts[0]] + pts[:0:-1]
        labels = (1,) + tuple(range(n, 1, -1))
    return Polygon(tuple(pts), labels, degenerate)


def reflex_vertices(P: Polygon) -> set[int]:
    """Labels whose interior angle exceeds pi (right turn on the CCW walk)."""
    out = set()
    n = P.n
    for k in range(n):
        a, b, c = P.vertices[k - 1], P.vertices[k], P.vertices[(k + 1) % n]
        if orient(a, b, c) < 0:
            out.add(P.labels[k])
    return out


def region_reflex_vertices(region: "Region") -> set[int]:
    """Labels whose interior angle in the region exceeds pi.

    Works for holes too: loops are stored with the region on their left
    (outer counterclockwise, holes clockwise), so a right turn along the
    stored loop is always a reflex corner of the region.
    """
    out = set()
    for loop in region.loops:
        m = len(loop)
        for k in range(m):
            a = region.point(loop[k - 1])
            b = region.point(loop[k])
            c = region.point(loop[(k + 1) % m])
            if orient(a, b, c) < 0:
                out.add(loop[k])
    return out


@dataclass(frozen=True)
class GeneralizedPolygon:
    """Planar region bounded by one outer loop plus h disjoint hole loops.

    Labels run 1..n: outer loop first (counterclockwise), then each hole in
    clockwise traversal order.
    """

    coords: tuple[Point, ...]                # indexed by label-1
    loops: tuple[tuple[int, ...], ...]       # loops[0] outer CCW, rest CW

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def h(self) -> int:
        return len(self.loops) - 1

    @property
    def degenerate(self) -> bool:
        return False

    def point(self, label: int) -> Point:
        return self.coords[label - 1]

    @cached_property
    def boundary_edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for loop in self.loops:
            m = len(loop)
            for k in range(m):
                i, j = loop[k], loop[(k + 1) % m]
                out.add((min(i, j), max(i, j)))
        return frozenset(out)

    def loop_points(self, idx: int) -> tuple[Point, ...]:
        return tuple(self.point(lab) for lab in self.loops[idx])

    def neighbors(self, label: int) -> tuple[int, int]:
        for loop in self.loops:
            if label in loop:
                k = loop.index(label)
                return loop[k - 1], loop[(k + 1) % len(loop)]
        raise KeyError(label)

    def loop_of(self, label: int) -> int:
        for idx, loop in enumerate(self.loops):
            if label in loop:
                return idx
        raise KeyError(label)

    def contains(self, p: Point) -> int:
        """-1 outside region / 0 on any boundary / +1 strictly interior."""
        side = _point_in_cycle(p, self.loop_points(0))
        if side <= 0:
            return side
        for idx in range(1, len(self.loops)):
            s = _point_in_cycle(p, self.loop_points(idx))
            if s == 0:
                return 0
            if s > 0:
                return -1
        return 1

    @cached_property
    def area(self) -> Fraction:
        total = abs(shoelace(self.loop_points(0)))
        for idx in range(1, len(self.loops)):
            total -= abs(shoelace(self.loop_points(idx)))
        return total

    def to_json_obj(self) -> dict:
        from .jsonio import fraction_to_json
        obj = {"vertices": [[fraction_to_json(p.x), fraction_to_json(p.y)]
                            for p in self.loop_points(0)]}
        holes = []
        for idx in range(1, len(self.loops)):
            holes.append([[fraction_to_json(p.x), fraction_to_json(p.y)]
                          for p in self.loop_points(idx)])
        if holes:
            obj["holes"] = holes
        return obj


Region = Union[Polygon, GeneralizedPolygon]


def validate_generalized(outer: Iterable, holes: Sequence[Iterable]) -> GeneralizedPolygon:
    """Validate an outer loop plus hole loops into a GeneralizedPolygon.

    Checks each loop individually, joint general position, and that holes are
    pairwise disjoint and strictly interior to the outer loop.
    """
    outer_poly = validate_polygon(outer)
    hole_polys = [validate_polygon(hv) for hv in holes]

    all_points = list(outer_poly.vertices)
    for hp in hole_polys:
        all_points.extend(hp.vertices)
    if len(set(all_points)) != len(all_points):
        raise NotSimple("shared vertex between boundary loops")
    _check_general_position(all_points)

    # loop-vs-loop edge crossings
    cycles = [outer_poly.vertices] + [hp.vertices for hp in hole_polys]
    for (i1, c1), (i2, c2) in itertools.combinations(enumerate(cycles), 2):
        for k1 in range(len(c1)):
            a, b = c1[k1], c1[(k1 + 1) % len(c1)]
            for k2 in range(len(c2)):
                c, d = c2[k2], c2[(k2 + 1) % len(c2)]
                if segments_properly_cross(a, b, c, d):
                    raise NotSimple(f"loops {i1} and {i2} cross")

    for hp in hole_polys:
        for p in hp.vertices:
            if _point_in_cycle(p, outer_poly.vertices) <= 0:
                raise NotSimple("hole vertex not strictly inside outer boundary")
    for h1, h2 in itertools.combinations(hole_polys, 2):
        if _point_in_cycle(h1.vertices[0], h2.vertices) > 0 or \
           _point_in_cycle(h2.vertices[0], h1.vertices) > 0:
            raise NotSimple("nested holes")

    coords: list[Point] = []
    loops: list[tuple[int, ...]] = []
    # outer keeps its CCW order; holes are stored clockwise
    start = len(coords) + 1
    coords.extend(outer_poly.vertices)
    loops.append(tuple(range(start, start + outer_poly.n)))
    for hp in hole_polys:
        cw = (hp.vertices[0],) + hp.vertices[:0:-1]
        start = len(coords) + 1
        coords.extend(cw)
        loops.append(tuple(range(start, start + hp.n)))
    return GeneralizedPolygon(tuple(coords), tuple(loops))


@dataclass(frozen=True)
class KernelRegion:
    """Intersection of the half-planes left of each boundary edge."""

    kind: str                      # "polygon" | "segment" | "point" | "empty"
    vertices: tuple[Point, ...]

    @property
    def is_empty(self) -> bool:
        return self.kind == "empty"

    @property
    def full_dimensional(self) -> bool:
        return self.kind == "polygon"

    def witness(self) -> Point | None:
        """A kernel point: interior when full-dimensional, else on the boundary."""
        if self.kind == "empty":
            return None
        if self.kind == "polygon":
            sx = sum((p.x for p in self.vertices), Fraction(0))
            sy = sum((p.y for p in self.vertices), Fraction(0))
            return Point(sx / len(self.vertices), sy / len(self.vertices))
        return self.vertices[0]


def _clip_halfplane(cycle: list[Point], a: Point, b: Point) -> list[Point]:
    """Keep the part of a convex cycle with orient(a, b, x) >= 0."""
    out: list[Point] = []
    m = len(cycle)
    for k in range(m):
        cur, nxt = cycle[k], cycle[(k + 1) % m]
        sc, sn = orient(a, b, cur), orient(a, b, nxt)
        if sc >= 0:
            out.append(cur)
        if (sc > 0 > sn) or (sc < 0 < sn):
            # exact intersection of segment cur-nxt with line a-b
            t = cross(a, b, cur) / (cross(a, b, cur) - cross(a, b, nxt))
            out.append(Point(cur.x + t * (nxt.x - cur.x),
                             cur.y + t * (nxt.y - cur.y)))
    dedup: list[Point] = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if dedup and len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def kernel(P: Polygon) -> KernelRegion:
    """Half-plane intersection over the directed boundary edges of P.

    Nonempty iff P is a star polygon; degenerate kernels (segment or point)
    are reported as such rather than dropped.
    """
    xs = [p.x for p in P.vertices]
    ys = [p.y for p in P.vertices]
    pad = Fraction(1)
    cycle = [Point(min(xs) - pad, min(ys) - pad),
             Point(max(xs) + pad, min(ys) - pad),
             Point(max(xs) + pad, max(ys) + pad),
             Point(min(xs) - pad, max(ys) + pad)]
    for k in range(P.n):
        a, b = P.vertices[k], P.vertices[(k + 1) % P.n]
        cycle = _clip_halfplane(cycle, a, b)
        if not cycle:
            return KernelRegion("empty", ())
    distinct = tuple(dict.fromkeys(cycle))
    if len(distinct) == 1:
        return KernelRegion("point", distinct)
    if shoelace(list(distinct)) == 0:
        ends = sorted(distinct)
        return KernelRegion("segment", (ends[0], ends[-1]))
    return KernelRegion("polygon", distinct)
