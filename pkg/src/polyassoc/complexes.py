"""The convex-diagonalization complex, flip graph, and dual simplicial complex.

A diagonalization is represented as a canonical tuple of diagonal pairs,
sorted lexicographically. The face poset orders diagonalizations by reverse
inclusion of their diagonal sets: adding diagonals moves down, and a face's
dimension is (n + 3h - 3) - #diagonals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import homology
from .errors import (
    CrossingDiagonals,
    DegeneratePolygon,
    NotABridgeDiagonal,
    NotADiagonal,
    NotConvexDiagonalization,
    RegionTooLarge,
    ValidationError,
)
from .geom import (
    GeneralizedPolygon,
    Point,
    Polygon,
    Region,
    orient,
    region_reflex_vertices,
    validate_polygon,
)
from .subdivision import region_pieces
from .visibility import (
    Pair,
    canon_pair,
    classify_pair,
    diagonals,
    pairs_noncross,
    visibility_graph,
)

DiagSet = tuple[Pair, ...]
DEFAULT_CAP = 10 ** 6


def canon_diagonalization(diags) -> DiagSet:
    return tuple(sorted(canon_pair(*d) for d in diags))


def _require_general_position(region: Region) -> None:
    if getattr(region, "degenerate", False):
        raise DegeneratePolygon(
            "polygon was accepted with allow_degenerate; complex operations "
            "need general position")


class _DiagTable:
    """Diagonals of a region with pairwise compatibility bitmasks."""

    def __init__(self, region: Region):
        self.region = region
        self.diags: list[Pair] = diagonals(region)
        self.index = {d: i for i, d in enumerate(self.diags)}
        k = len(self.diags)
        self.compat = [0] * k
        for a in range(k):
            for b in range(a + 1, k):
                if pairs_noncross(region, self.diags[a], self.diags[b]):
                    self.compat[a] |= 1 << b
                    self.compat[b] |= 1 << a
        self.incidence: dict[int, int] = {}
        for i, (p, q) in enumerate(self.diags):
            self.incidence[p] = self.incidence.get(p, 0) | 1 << i
            self.incidence[q] = self.incidence.get(q, 0) | 1 << i
        self.reflex_masks = [
            self.incidence.get(r, 0) for r in sorted(region_reflex_vertices(region))
        ]

    def to_diagset(self, chosen: tuple[int, ...]) -> DiagSet:
        return tuple(self.diags[i] for i in chosen)


class _ConvexTester:
    """Local angular test: a diagonal set is convex iff at every reflex
    vertex the incident rays split the interior cone into sectors < pi."""

    def __init__(self, table: _DiagTable):
        region = table.region
        self.per_vertex: list[tuple[list[int], list, object, object]] = []
        for r in sorted(region_reflex_vertices(region)):
            pv = region.point(r)
            prev, nxt = region.neighbors(r)
            d_start = _dirvec(pv, region.point(nxt))   # cone opens ccw from here
            d_end = _dirvec(pv, region.point(prev))
            incident = [i for i in range(len(table.diags)) if r in table.diags[i]]
            # angular order ccw from the cone start; ties impossible in
            # general position
            incident.sort(key=lambda i: _CcwFrom(d_start, _ray(table, region, r, i)))
            rays = [_ray(table, region, r, i) for i in incident]
            self.per_vertex.append((incident, rays, d_start, d_end))

    def is_convex(self, chosen_mask: int) -> bool:
        for incident, rays, d_start, d_end in self.per_vertex:
            prev_dir = d_start
            any_ray = False
            for i, ray in zip(incident, rays):
                if not (chosen_mask >> i) & 1:
                    continue
                any_ray = True
                if _cross2(prev_dir, ray) <= 0:
                    return False
                prev_dir = ray
            if not any_ray:
                return False  # reflex cone left whole: sector > pi
            if _cross2(prev_dir, d_end) <= 0:
                return False
        return True


def _dirvec(a: Point, b: Point):
    return (b.x - a.x, b.y - a.y)


def _cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _ray(table: _DiagTable, region: Region, r: int, i: int):
    d, e = table.diags[i]
    other = e if d == r else d
    return _dirvec(region.point(r), region.point(other))


class _CcwFrom:
    """Orderable wrapper: angle of a direction ccw from a reference ray."""

    __slots__ = ("half", "vec")

    def __init__(self, ref, vec):
        c = _cross2(ref, vec)
        dot = ref[0] * vec[0] + ref[1] * vec[1]
        self.half = 0 if c > 0 or (c == 0 and dot > 0) else 1
        self.vec = vec

    def __lt__(self, other: "_CcwFrom") -> bool:
        if self.half != other.half:
            return self.half < other.half
        return _cross2(self.vec, other.vec) > 0


def _triangulation_size(region: Region) -> int:
    return region.n + 3 * region.h - 3


def enumerate_triangulations(region: Region, cap: int = DEFAULT_CAP) -> list[DiagSet]:
    """All triangulations (maximal noncrossing diagonal sets) of a region.

    Each has exactly n - 3 diagonals, or n + 3h - 3 with holes; output is in
    lexicographic order of the canonical diagonal tuples.
    """
    _require_general_position(region)
    table = _DiagTable(region)
    return _enumerate_triangulations(table, cap)


def _enumerate_triangulations(table: _DiagTable, cap: int) -> list[DiagSet]:
    m = _triangulation_size(table.region)
    k = len(table.diags)
    out: list[DiagSet] = []
    if m == 0:
        return [()]
    compat = table.compat
    reflex_masks = table.reflex_masks

    def rec(chosen: list[int], chosen_mask: int, avail: int) -> None:
        depth = len(chosen)
        if depth == m:
            if len(out) >= cap:
                raise RegionTooLarge(cap, len(out), "triangulations")
            out.append(table.to_diagset(tuple(chosen)))
            return
        if depth + avail.bit_count() < m:
            return
        cover = chosen_mask | avail
        for mask in reflex_masks:
            if not (cover & mask):
                return
        rest = avail
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            # enforce increasing index order: candidates above i only
            rec(chosen + [i], chosen_mask | low,
                avail & compat[i] & ~((low << 1) - 1))

    rec([], 0, (1 << k) - 1)
    return out


def noncrossing_subsets(region: Region, cap: int = DEFAULT_CAP) -> list[DiagSet]:
    """Every noncrossing diagonal subset (the faces of the dual complex),
    including the empty set, in lexicographic order."""
    _require_general_position(region)
    table = _DiagTable(region)
    return [table.to_diagset(c) for c in _noncrossing_index_subsets(table, cap)]


def _noncrossing_index_subsets(table: _DiagTable, cap: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    compat = table.compat

    def rec(chosen: tuple[int, ...], avail: int) -> None:
        if len(out) >= cap:
            raise RegionTooLarge(cap, len(out), "noncrossing subsets")
        out.append(chosen)
        rest = avail
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            rec(chosen + (i,), avail & compat[i] & ~((low << 1) - 1))

    rec((), (1 << len(table.diags)) - 1)
    return out


def is_convex_diagonalization(region: Region, diags_in) -> bool:
    """True iff the noncrossing set ``diags_in`` cuts the region into convex
    pieces. Raises CrossingDiagonals / NotADiagonal on bad input."""
    _require_general_position(region)
    D = canon_diagonalization(diags_in)
    for d in D:
        if classify_pair(region, *d) != "diagonal":
            raise NotADiagonal(f"{d} is not a diagonal")
    for a, b in itertools.combinations(D, 2):
        if not pairs_noncross(region, a, b):
            raise CrossingDiagonals(f"{a} crosses {b}")
    pieces, inner_walks = region_pieces(region, D)
    if inner_walks:
        return False
    for cyc in pieces:
        m = len(cyc)
        for t in range(m):
            a = region.point(cyc[t - 1])
            b = region.point(cyc[t])
            c = region.point(cyc[(t + 1) % m])
            if orient(a, b, c) <= 0:
                return False
    return True


@dataclass(frozen=True)
class ComplexKP:
    """Face poset of the convex-diagonalization complex of a region."""

    n: int
    h: int
    faces: tuple[DiagSet, ...]            # sorted by (#diagonals, lex)
    dims: tuple[int, ...]
    maximal: tuple[bool, ...]
    covers: tuple[tuple[int, int], ...]   # (upper, lower): lower adds one diagonal

    @property
    def dim(self) -> int:
        return max(self.dims)

    @property
    def d_min(self) -> int:
        """d(P): minimum number of diagonals in a convex diagonalization."""
        return min(len(f) for f in self.faces)

    @cached_property
    def face_index(self) -> dict[DiagSet, int]:
        return {f: i for i, f in enumerate(self.faces)}

    def f_vector(self) -> list[int]:
        out = [0] * (self.dim + 1)
        for d in self.dims:
            out[d] += 1
        return out

    def euler_characteristic(self) -> int:
        return sum((-1) ** d for d in self.dims)

    @cached_property
    def vertices(self) -> tuple[DiagSet, ...]:
        """The triangulations: faces of dimension 0."""
        return tuple(f for f, d in zip(self.faces, self.dims) if d == 0)

    def skeleton_edges(self) -> set[frozenset[DiagSet]]:
        """1-skeleton: each 1-face joins the two triangulations refining it."""
        out = set()
        for f, d in zip(self.faces, self.dims):
            if d != 1:
                continue
            fs = set(f)
            ends = [v for v in self.vertices if fs <= set(v)]
            if len(ends) == 2:
                out.add(frozenset(ends))
        return out

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "h": self.h,
            "dim": self.dim,
            "dP": self.d_min,
            "faces": [
                {"diagonals": [list(d) for d in f], "dim": dim, "maximal": mx}
                for f, dim, mx in zip(self.faces, self.dims, self.maximal)
            ],
            "covers": [list(c) for c in self.covers],
        }


def build_complex(region: Region, cap: int = DEFAULT_CAP) -> ComplexKP:
    """Every convex diagonalization of the region as a face, with the Hasse
    covering relations and maximal faces marked."""
    _require_general_position(region)
    table = _DiagTable(region)
    tester = _ConvexTester(table)
    m_top = _triangulation_size(region)
    faces: list[DiagSet] = []

    def rec(chosen: tuple[int, ...], chosen_mask: int, avail: int,
            known_convex: bool) -> None:
        convex = known_convex or tester.is_convex(chosen_mask)
        if convex:
            if len(faces) >= cap:
                raise RegionTooLarge(cap, len(faces), "faces")
            faces.append(table.to_diagset(chosen))
        else:
            # a convex refinement still needs a diagonal at every reflex
            # vertex: prune when one can no longer be covered
            cover = chosen_mask | avail
            for mask in table.reflex_masks:
                if not (cover & mask):
                    return
        rest = avail
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            rec(chosen + (i,), chosen_mask | low,
                avail & table.compat[i] & ~((low << 1) - 1), convex)

    rec((), 0, (1 << len(table.diags)) - 1, False)
    faces.sort(key=lambda f: (len(f), f))
    face_index = {f: i for i, f in enumerate(faces)}
    covers = []
    lower_of_cover = set()
    for idx, f in enumerate(faces):
        for d in f:
            up = tuple(x for x in f if x != d)
            j = face_index.get(up)
            if j is not None:
                covers.append((j, idx))
                lower_of_cover.add(idx)
    maximal = tuple(i not in lower_of_cover for i in range(len(faces)))
    dims = tuple(m_top - len(f) for f in faces)
    return ComplexKP(region.n, region.h, tuple(faces), dims, maximal,
                     tuple(sorted(covers)))


def minimal_convex_diagonalizations(region: Region, cap: int = DEFAULT_CAP):
    """Inclusion-minimal convex diagonalizations (the maximal faces of the
    complex), plus d(P) = the minimum diagonal count among them."""
    kp = build_complex(region, cap)
    mins = [f for f, mx in zip(kp.faces, kp.maximal) if mx]
    return mins, kp.d_min


@dataclass(frozen=True)
class FacePiece:
    labels: tuple[int, ...]     # ccw cycle, minimum label first

    @property
    def size(self) -> int:
        return len(self.labels)


def face_factorization(region: Region, diags_in) -> list[FacePiece]:
    """Pieces cut out by a convex diagonalization: k diagonals give k+1
    convex sub-polygons whose complexes multiply to the face above D."""
    D = canon_diagonalization(diags_in)
    if not is_convex_diagonalization(region, D):
        raise NotConvexDiagonalization(f"{D} does not cut convex pieces")
    pieces, _ = region_pieces(region, D)
    return [FacePiece(c) for c in pieces]


@dataclass(frozen=True)
class FlipGraph:
    nodes: tuple[DiagSet, ...]
    arcs: tuple[tuple[int, int], ...]
    connected: bool

    def degree(self, i: int) -> int:
        return sum(1 for a in self.arcs if i in a)

    def neighbors(self, i: int) -> list[int]:
        return [b if a == i else a for a, b in self.arcs if i in (a, b)]

    def to_dot(self) -> str:
        lines = ["graph flip {"]
        for i, node in enumerate(self.nodes):
            label = ",".join(f"{a}-{b}" for a, b in node) or "(empty)"
            lines.append(f'  {i} [label="{label}"];')
        for a, b in self.arcs:
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "nodes": [[list(d) for d in node] for node in self.nodes],
            "arcs": [list(a) for a in self.arcs],
            "connected": self.connected,
        }


def flip_graph(region: Region, cap: int = DEFAULT_CAP) -> FlipGraph:
    """Triangulations joined when they differ by a single edge flip."""
    tris = enumerate_triangulations(region, cap)
    by_subset: dict[DiagSet, list[int]] = {}
    for i, t in enumerate(tris):
        for d in t:
            key = tuple(x for x in t if x != d)
            by_subset.setdefault(key, []).append(i)
    arcs = set()
    for group in by_subset.values():
        for a, b in itertools.combinations(group, 2):
            arcs.add((min(a, b), max(a, b)))
    adj: dict[int, list[int]] = {i: [] for i in range(len(tris))}
    for a, b in arcs:
        adj[a].append(b)
        adj[b].append(a)
    seen = set()
    stack = [0] if tris else []
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(adj[v])
    return FlipGraph(tuple(tris), tuple(sorted(arcs)), len(seen) == len(tris))


@dataclass(frozen=True)
class ThetaComplex:
    """Simplicial complex on the diagonals; faces are noncrossing subsets,
    facets the triangulations. Combinatorially dual to the face complex."""

    diagonals: tuple[Pair, ...]
    simplices: tuple[tuple[int, ...], ...]   # nonempty, as index tuples
    facets: tuple[tuple[int, ...], ...]
    convex_case: bool
    homology: tuple[homology.HomologyGroup, ...]

    @property
    def dim(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    @property
    def homology_trivial(self) -> bool:
        return all(g.trivial for g in self.homology)

    def to_json_obj(self) -> dict:
        return {
            "diagonals": [list(d) for d in self.diagonals],
            "simplices": [list(s) for s in self.simplices],
            "convexCase": self.convex_case,
            "reducedHomology": [
                {"rank": g.rank, "torsion": list(g.torsion)} for g in self.homology
            ],
        }


def theta_complex(region: Region, cap: int = DEFAULT_CAP) -> ThetaComplex:
    """The dual simplicial complex with reduced integer homology.

    For a convex polygon the complex is the boundary dual (a sphere), so it
    is flagged and its homology is not expected to vanish.
    """
    _require_general_position(region)
    table = _DiagTable(region)
    subsets = _noncrossing_index_subsets(table, cap)
    simplices = tuple(s for s in subsets if s)
    m = _triangulation_size(region)
    facets = tuple(s for s in simplices if len(s) == m)
    convex_case = isinstance(region, Polygon) and region.is_convex
    by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
    for s in simplices:
        by_dim[len(s) - 1].append(s)
    groups = homology.reduced_homology(by_dim) if simplices else ()
    return ThetaComplex(tuple(table.diags), simplices, facets, convex_case, groups)


# -- facet-removal construction (independent combinatorial route) -----------

def _labels_interleave(a: Pair, b: Pair) -> bool:
    (p, q), (r, s) = a, b
    return (p < r < q < s) or (r < p < s < q)


def convex_model_subsets(n: int, cap: int = DEFAULT_CAP) -> list[DiagSet]:
    """All noncrossing diagonal sets of the convex n-gon on labels 1..n,
    decided purely by label interleaving (no geometry)."""
    diags = [(i, j) for i, j in itertools.combinations(range(1, n + 1), 2)
             if j - i != 1 and not (i == 1 and j == n)]
    k = len(diags)
    compat = [0] * k
    for a in range(k):
        for b in range(a + 1, k):
            if not _labels_interleave(diags[a], diags[b]):
                compat[a] |= 1 << b
                compat[b] |= 1 << a
    out: list[DiagSet] = []

    def rec(chosen: tuple[Pair, ...], avail: int) -> None:
        if len(out) >= cap:
            raise RegionTooLarge(cap, len(out), "model faces")
        out.append(chosen)
        rest = avail
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            rec(chosen + (diags[i],), avail & compat[i] & ~((low << 1) - 1))

    rec((), (1 << k) - 1)
    return out


def facet_removal_complex(P: Polygon, cap: int = DEFAULT_CAP):
    """K_P built the other way: from the faces of the convex model on the
    same labels, delete the open star of every facet whose diagonal is not a
    diagonal of P.

    Returns (kept, removed): kept is exactly the face set of build_complex(P)
    when both constructions are correct; removed is the deleted face set.
    """
    _require_general_position(P)
    model = convex_model_subsets(P.n, cap)
    real = set(diagonals(P))
    all_pairs = {(i, j) for i, j in itertools.combinations(range(1, P.n + 1), 2)
                 if (i, j) not in P.boundary_edges}
    forbidden = sorted(all_pairs - real)
    kept, removed = [], []
    for D in model:
        hit = any(all(not _labels_interleave(f, d) for d in D) for f in forbidden)
        (removed if hit else kept).append(tuple(sorted(D)))
    return sorted(kept, key=lambda f: (len(f), f)), sorted(removed, key=lambda f: (len(f), f))


def removed_subcomplex_connected(removed: list[DiagSet]) -> bool:
    """Whether the closed removed faces form a connected set: two closed
    faces meet iff the union of their diagonal sets is noncrossing."""
    if not removed:
        return True
    k = len(removed)
    sets = [set(d) for d in removed]

    def compatible(a: int, b: int) -> bool:
        for x in sets[a]:
            for y in sets[b]:
                if _labels_interleave(x, y):
                    return False
        return True

    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in range(k):
            if w not in seen and compatible(v, w):
                seen.add(w)
                stack.append(w)
    return len(seen) == k


# -- hole splitting ----------------------------------------------------------

@dataclass(frozen=True)
class SplitResult:
    polygon: Polygon
    label_map: tuple[int, ...]     # new label -> original label
    bridge: Pair
    halfwidth: Fraction

    def map_pair(self, i: int, j: int) -> Pair | None:
        a, b = self.label_map[i - 1], self.label_map[j - 1]
        if a == b:
            return None
        return canon_pair(a, b)


def _dir_in_cone(start, end, g) -> bool:
    """Is direction g strictly inside the cone sweeping ccw from start to end?"""
    se = _cross2(start, end)
    sg = _cross2(start, g)
    ge = _cross2(g, end)
    if se > 0:
        return sg > 0 and ge > 0
    if se < 0:
        return sg > 0 or ge > 0
    return sg > 0  # straight cone of angle pi


def hole_split(R: GeneralizedPolygon, d: Pair, max_shrink: int = 60) -> SplitResult:
    """Cut a one-hole region along a bridge diagonal into a simple polygon.

    The bridge is doubled into two slit edges of exact rational half-width;
    the width is halved until the polygon validates and its visibility graph,
    collapsed along the label map, equals the cut region's (all visibility
    pairs of R except those properly crossing the open bridge).
    """
    if R.h != 1:
        raise ValidationError("hole_split needs a region with exactly one hole")
    u, w = d
    if R.loop_of(u) != 0 or R.loop_of(w) != 1:
        u, w = w, u
    if R.loop_of(u) != 0 or R.loop_of(w) != 1:
        raise NotABridgeDiagonal(f"{d} does not join the outer boundary to the hole")
    if classify_pair(R, u, w) != "diagonal":
        raise NotABridgeDiagonal(f"{d} is not a diagonal of the region")

    outer, hole = R.loops[0], R.loops[1]
    ou = outer.index(u)
    outer_seq = outer[ou:] + outer[:ou]          # starts at u
    hw = hole.index(w)
    hole_seq = hole[hw:] + hole[:hw]             # starts at w, stored cw

    pu, pw = R.point(u), R.point(w)
    bridge = (pw.x - pu.x, pw.y - pu.y)
    perp = (-bridge[1], bridge[0])

    # tilt the slit-side copies into the local interior cones
    mu = Fraction(1, 4)
    for _ in range(40):
        du = (bridge[0] + mu * perp[0], bridge[1] + mu * perp[1])
        dw = (-bridge[0] + mu * perp[0], -bridge[1] + mu * perp[1])
        pu_prev, pu_next = R.neighbors(u)
        pw_prev, pw_next = R.neighbors(w)
        cone_u = (_dirvec(pu, R.point(pu_next)), _dirvec(pu, R.point(pu_prev)))
        cone_w = (_dirvec(pw, R.point(pw_next)), _dirvec(pw, R.point(pw_prev)))
        if _dir_in_cone(cone_u[0], cone_u[1], du) and \
           _dir_in_cone(cone_w[0], cone_w[1], dw):
            break
        mu /= 4
    else:
        raise NotABridgeDiagonal("could not open the slit inside the region")

    from .geom import segments_properly_cross
    expected = set()
    for (i, j) in visibility_graph(R).edges:
        if segments_properly_cross(R.point(i), R.point(j), pu, pw):
            continue
        expected.add((i, j))

    label_map = ([u] + [outer_seq[k] for k in range(1, len(outer_seq))]
                 + [u, w] + [hole_seq[k] for k in range(1, len(hole_seq))] + [w])

    for k in range(2, max_shrink):
        eps = Fraction(1, 2 ** k)
        u2 = Point(pu.x + eps * du[0], pu.y + eps * du[1])
        w2 = Point(pw.x + eps * dw[0], pw.y + eps * dw[1])
        verts = ([pu] + [R.point(outer_seq[t]) for t in range(1, len(outer_seq))]
                 + [u2, w2]
                 + [R.point(hole_seq[t]) for t in range(1, len(hole_seq))] + [pw])
        try:
            Q = validate_polygon(verts)
        except ValidationError:
            continue
        res = SplitResult(Q, tuple(label_map), canon_pair(u, w), eps)
        got = set()
        for (i, j) in visibility_graph(Q).edges:
            mapped = res.map_pair(i, j)
            if mapped is not None:
                got.add(mapped)
        if got == expected:
            return res
    raise NotABridgeDiagonal("slit construction did not stabilize")
