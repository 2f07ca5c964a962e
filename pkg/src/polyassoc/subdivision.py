"""Face tracing for the planar subdivision induced by noncrossing chords.

Given a region and a set of noncrossing diagonals, walks every directed
half-edge once with the face kept on its left. Counterclockwise cycles are
bounded faces; the clockwise ones are the unbounded walk around the outer
boundary and, for faces that still enclose an intact hole, the walk around
that hole.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Iterable, Sequence

from .geom import Point, Region, shoelace

Pair = tuple[int, int]


def _direction_cmp(u: tuple, v: tuple) -> int:
    """Counterclockwise order of directions starting just above +x axis."""
    (ux, uy), (vx, vy) = u, v
    hu = 0 if (uy > 0 or (uy == 0 and ux > 0)) else 1
    hv = 0 if (vy > 0 or (vy == 0 and vx > 0)) else 1
    if hu != hv:
        return -1 if hu < hv else 1
    crossv = ux * vy - uy * vx
    if crossv > 0:
        return -1
    if crossv < 0:
        return 1
    return 0


def trace_cycles(region: Region, chords: Iterable[Pair]):
    """All face-boundary walks; returns (ccw_cycles, cw_cycles) of label tuples."""
    adj: dict[int, list[int]] = {lab: [] for lab in range(1, region.n + 1)}
    edges = set(region.boundary_edges)
    for (i, j) in chords:
        edges.add((min(i, j), max(i, j)))
    for (i, j) in edges:
        adj[i].append(j)
        adj[j].append(i)

    order: dict[int, list[int]] = {}
    pos: dict[tuple[int, int], int] = {}
    for v, nbrs in adj.items():
        pv = region.point(v)

        def key(w, pv=pv):
            pw = region.point(w)
            return (pw.x - pv.x, pw.y - pv.y)

        nbrs_sorted = sorted(nbrs, key=cmp_to_key(
            lambda a, b: _direction_cmp(key(a), key(b))))
        order[v] = nbrs_sorted
        for idx, w in enumerate(nbrs_sorted):
            pos[(v, w)] = idx

    used: set[tuple[int, int]] = set()
    ccw, cw = [], []
    for (i, j) in sorted(edges):
        for start in ((i, j), (j, i)):
            if start in used:
                continue
            walk = []
            u, v = start
            while (u, v) not in used:
                used.add((u, v))
                walk.append(u)
                nbrs = order[v]
                k = pos[(v, u)]
                w = nbrs[(k - 1) % len(nbrs)]
                u, v = v, w
            cycle = tuple(walk)
            pts = [region.point(lab) for lab in cycle]
            if shoelace(pts) > 0:
                ccw.append(cycle)
            else:
                cw.append(cycle)
    return ccw, cw


def _cycle_edge_set(cycle: Sequence[int]) -> frozenset[Pair]:
    out = set()
    m = len(cycle)
    for k in range(m):
        i, j = cycle[k], cycle[(k + 1) % m]
        out.add((min(i, j), max(i, j)))
    return frozenset(out)


def _canon_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate so the minimum label comes first, preserving orientation."""
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def region_pieces(region: Region, chords: Iterable[Pair]):
    """Pieces of the partition of ``region`` by noncrossing ``chords``.

    Returns (pieces, inner_walks): pieces are counterclockwise label cycles
    (minimum label first); inner_walks is nonempty iff some piece still
    encloses a hole, which downstream code treats as nonconvex.
    """
    chords = list(chords)
    ccw, cw = trace_cycles(region, chords)

    loop_edge_sets = [_cycle_edge_set(loop) for loop in region.loops]
    outer_edges = loop_edge_sets[0]
    hole_edge_sets = loop_edge_sets[1:]

    pieces = []
    leftover_holes = list(hole_edge_sets)
    for cycle in ccw:
        es = _cycle_edge_set(cycle)
        if es in leftover_holes:
            # the interior of an intact hole, not a piece of the region
            leftover_holes.remove(es)
            continue
        pieces.append(_canon_cycle(cycle))
    if leftover_holes:
        raise AssertionError("hole interior face not found in traced cycles")

    inner_walks = []
    unbounded_seen = False
    for cycle in cw:
        if not unbounded_seen and _cycle_edge_set(cycle) <= outer_edges:
            unbounded_seen = True
            continue
        inner_walks.append(_canon_cycle(cycle))
    if not unbounded_seen:
        raise AssertionError("unbounded face walk not found")

    pieces.sort()
    inner_walks.sort()
    return pieces, inner_walks
