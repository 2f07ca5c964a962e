"""Diagonals, visibility graphs, and noncrossing tests.

A diagonal is stored as a canonical label pair (i, j) with i < j. The open
segment between two vertices is a diagonal when it crosses no boundary edge,
contains no third vertex, and has its midpoint strictly interior; under
general position these three exact tests are complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from .errors import NotADiagonal, SameVertex
from .geom import (
    Point,
    Region,
    open_segments_intersect,
    point_on_open_segment,
    segments_properly_cross,
)

Pair = tuple[int, int]


def canon_pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


def classify_pair(R: Region, i: int, j: int) -> str:
    """One of "edge", "diagonal", "blocked" for a label pair of R."""
    if i == j:
        raise SameVertex(f"vertex {i} paired with itself")
    pair = canon_pair(i, j)
    if pair in R.boundary_edges:
        return "edge"
    a, b = R.point(i), R.point(j)
    for (u, v) in R.boundary_edges:
        if segments_properly_cross(a, b, R.point(u), R.point(v)):
            return "blocked"
    for lab in range(1, R.n + 1):
        if lab in pair:
            continue
        if point_on_open_segment(R.point(lab), a, b):
            return "blocked"
    mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    if R.contains(mid) != 1:
        return "blocked"
    return "diagonal"


def is_diagonal(R: Region, i: int, j: int) -> bool:
    """True iff the open segment between vertices i and j is an interior
    diagonal of R. Adjacent pairs return False (they are boundary edges)."""
    return classify_pair(R, i, j) == "diagonal"


@dataclass(frozen=True)
class VisibilityGraph:
    """Labeled visibility graph: all boundary edges plus all diagonals."""

    n: int
    edges: tuple[Pair, ...]          # sorted canonical pairs

    @cached_property
    def edge_set(self) -> frozenset[Pair]:
        return frozenset(self.edges)

    @property
    def rank(self) -> int:
        return len(self.edges)

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_dot(self) -> str:
        lines = ["graph V {"]
        for i, j in self.edges:
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def diagonals(R: Region) -> list[Pair]:
    """All diagonals of R in lexicographic order."""
    out = []
    for i, j in combinations(range(1, R.n + 1), 2):
        if (i, j) in R.boundary_edges:
            continue
        if classify_pair(R, i, j) == "diagonal":
            out.append((i, j))
    return out


def visibility_graph(R: Region) -> VisibilityGraph:
    edges = sorted(set(R.boundary_edges) | set(diagonals(R)))
    return VisibilityGraph(R.n, tuple(edges))


def noncrossing(R: Region, d1: Pair, d2: Pair) -> bool:
    """True iff two diagonals of R do not cross (shared endpoints allowed)."""
    d1, d2 = canon_pair(*d1), canon_pair(*d2)
    for d in (d1, d2):
        if classify_pair(R, *d) != "diagonal":
            raise NotADiagonal(f"{d} is not a diagonal")
    if set(d1) & set(d2):
        return True
    return not open_segments_intersect(
        R.point(d1[0]), R.point(d1[1]), R.point(d2[0]), R.point(d2[1]))


def pairs_noncross(R: Region, d1: Pair, d2: Pair) -> bool:
    """noncrossing() without re-validating that the pairs are diagonals."""
    if set(d1) & set(d2):
        return True
    return not open_segments_intersect(
        R.point(d1[0]), R.point(d1[1]), R.point(d2[0]), R.point(d2[1]))
