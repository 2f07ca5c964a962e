"""Reduced integer homology of finite simplicial complexes.

Boundary matrices are reduced over the integers by unimodular row/column
operations (a Smith-style diagonalization with arbitrary-precision ints), so
torsion is visible; no field shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: tuple[int, ...]

    @property
    def trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = ["Z"] * self.rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def snf_diagonal(num_rows: int, num_cols: int,
                 entries: dict[tuple[int, int], int]) -> list[int]:
    """Positive diagonal of an integer matrix after unimodular reduction.

    The returned list has one entry per nonzero pivot; the multiset defines
    the cokernel torsion (normalize with invariant_factors for reporting).
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (r, c), v in entries.items():
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, set()).add(r)

    def row_op(dst: int, src: int, q: int) -> None:
        # row dst -= q * row src
        if q == 0:
            return
        drow = rows.setdefault(dst, {})
        for c, v in list(rows.get(src, {}).items()):
            nv = drow.get(c, 0) - q * v
            if nv:
                drow[c] = nv
                cols.setdefault(c, set()).add(dst)
            elif c in drow:
                del drow[c]
                cols[c].discard(dst)
        if not drow:
            rows.pop(dst, None)

    def col_op(dst: int, src: int, q: int) -> None:
        # col dst -= q * col src
        if q == 0:
            return
        for r in list(cols.get(src, ())):
            v = rows[r].get(src, 0)
            if not v:
                continue
            nv = rows[r].get(dst, 0) - q * v
            if nv:
                rows[r][dst] = nv
                cols.setdefault(dst, set()).add(r)
            elif dst in rows[r]:
                del rows[r][dst]
                cols[dst].discard(r)

    diagonal: list[int] = []
    while rows:
        # pivot: smallest magnitude, preferring low fill
        best = None
        for r, rowd in rows.items():
            for c, v in rowd.items():
                key = (abs(v), len(rowd) + len(cols[c]))
                if best is None or key < best[0]:
                    best = (key, r, c)
                    if key[0] == 1 and key[1] <= 2:
                        break
            else:
                continue
            break
        _, pr, pc = best  # type: ignore[misc]

        while True:
            pv = rows[pr][pc]
            other_rows = [r for r in cols[pc] if r != pr and pc in rows.get(r, {})]
            moved = False
            for r in other_rows:
                v = rows[r][pc]
                q = v // pv
                row_op(r, pr, q)
                if rows.get(r, {}).get(pc):
                    pr = r  # strictly smaller remainder becomes the pivot
                    moved = True
                    break
            if moved:
                continue
            pv = rows[pr][pc]
            other_cols = [c for c in rows[pr] if c != pc]
            moved = False
            for c in other_cols:
                v = rows[pr][c]
                q = v // pv
                col_op(c, pc, q)
                if rows[pr].get(c):
                    pc = c
                    moved = True
                    break
            if moved:
                continue
            break

        diagonal.append(abs(rows[pr][pc]))
        del rows[pr][pc]
        if not rows[pr]:
            del rows[pr]
        cols[pc].discard(pr)
        if not cols[pc]:
            del cols[pc]
    return diagonal


def invariant_factors(diagonal: list[int]) -> list[int]:
    """Normalize a diagonal multiset into the divisibility chain d1 | d2 | ..."""
    vals = [d for d in diagonal if d != 0]
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                a, b = vals[i], vals[j]
                if b % a != 0:
                    g = gcd(a, b)
                    vals[i], vals[j] = g, a * b // g
                    changed = True
    return sorted(vals)


def reduced_homology(simplices_by_dim: list[list[tuple[int, ...]]]) -> tuple[HomologyGroup, ...]:
    """Reduced homology groups H~_0 .. H~_top of a simplicial complex.

    ``simplices_by_dim[k]`` lists the k-simplices as sorted vertex tuples;
    the complex must be closed under taking faces.
    """
    top = len(simplices_by_dim) - 1
    while top >= 0 and not simplices_by_dim[top]:
        top -= 1
    if top < 0:
        return ()
    index = [
        {s: i for i, s in enumerate(sorted(simplices_by_dim[k]))}
        for k in range(top + 1)
    ]
    counts = [len(ix) for ix in index]

    # boundary_k maps C_k -> C_{k-1}; k = 0 is the augmentation to Z
    diagonals: list[list[int]] = []
    for k in range(top + 1):
        entries: dict[tuple[int, int], int] = {}
        if k == 0:
            for col in range(counts[0]):
                entries[(0, col)] = 1
            diagonals.append(snf_diagonal(1, counts[0], entries))
            continue
        for s, col in index[k].items():
            for t, vert in enumerate(s):
                face = s[:t] + s[t + 1:]
                entries[(index[k - 1][face], col)] = -1 if t % 2 else 1
        diagonals.append(snf_diagonal(counts[k - 1], counts[k], entries))

    ranks = [len(d) for d in diagonals] + [0]
    groups = []
    for k in range(top + 1):
        free = counts[k] - ranks[k] - ranks[k + 1]
        torsion = tuple(t for t in invariant_factors(
            diagonals[k + 1] if k + 1 <= top else []) if t > 1)
        groups.append(HomologyGroup(free, torsion))
    return tuple(groups)
